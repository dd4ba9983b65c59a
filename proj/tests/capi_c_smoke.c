/* Compiled as C to guarantee the public header stays C-clean. */
#include <stdio.h>
#include <string.h>

#include "leibcas.h"

int main(void) {
  lbz_session* session = NULL;
  if (lbz_session_new("{\"format\":\"json\"}", &session) != LBZ_OK) return 1;

  lbz_algebra* algebra = NULL;
  const char* n2 =
      "{\"dim\": 2, \"field\": \"Q\", \"brackets\":"
      " [{\"left\": 1, \"right\": 1, \"out\": [{\"k\": 0, \"c\": \"1\"}]}]}";
  if (lbz_algebra_from_json(session, n2, &algebra) != LBZ_OK) {
    fprintf(stderr, "load: %s\n", lbz_session_last_error(session));
    return 1;
  }
  if (lbz_algebra_dim(algebra) != 2) return 1;

  char* report = NULL;
  if (lbz_cmd_verify(session, algebra, &report) != LBZ_OK) return 1;
  if (report == NULL || strstr(report, "\"leibniz\": true") == NULL) return 1;
  lbz_string_free(report);

  if (lbz_cmd_free_expr(session, "[x1,[x2,x3]]", 0, &report) != LBZ_OK) return 1;
  if (strstr(report, "(x1 x2 x3) - (x1 x3 x2)") == NULL) return 1;
  lbz_string_free(report);

  lbz_algebra_free(algebra);
  lbz_session_free(session);
  printf("ok\n");
  return 0;
}
