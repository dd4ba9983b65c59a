#include "leibcas.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "leibcas/errors.hpp"
#include "leibcas/reports.hpp"

using namespace leibcas;

struct lbz_session {
  RunConfig config;
  std::string last_error;
};

struct lbz_algebra {
  StructureAlgebra value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs `fn` (returning a CommandResult), converting exceptions to status
/// codes and recording errors on the session.
template <typename Fn>
lbz_status run_command(lbz_session* session, char** out_report, Fn&& fn) {
  if (!session) return LBZ_USAGE_ERROR;
  if (out_report) *out_report = nullptr;
  session->last_error.clear();
  try {
    CommandResult result = fn();
    if (out_report) *out_report = dup_string(result.rendered(session->config.format));
    if (result.exit_code == 2) {
      session->last_error = "mathematical rejection; see report";
      return LBZ_MATH_REJECT;
    }
    return LBZ_OK;
  } catch (const usage_error& e) {
    session->last_error = e.what();
    return LBZ_USAGE_ERROR;
  } catch (const std::exception& e) {
    session->last_error = e.what();
    return LBZ_USAGE_ERROR;
  }
}

}  // namespace

extern "C" {

lbz_status lbz_session_new(const char* options_json, lbz_session** out) {
  if (!out) return LBZ_USAGE_ERROR;
  *out = nullptr;
  try {
    auto session = new lbz_session();
    session->config = config_from_json(options_json ? options_json : "");
    *out = session;
    return LBZ_OK;
  } catch (const std::exception&) {
    return LBZ_USAGE_ERROR;
  }
}

void lbz_session_free(lbz_session* session) { delete session; }

const char* lbz_session_last_error(const lbz_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

lbz_status lbz_algebra_from_json(lbz_session* session, const char* algebra_json,
                                 lbz_algebra** out) {
  if (!session || !out) return LBZ_USAGE_ERROR;
  *out = nullptr;
  session->last_error.clear();
  try {
    if (!algebra_json) throw usage_error("null algebra JSON");
    StructureAlgebra a = load_algebra(session->config, algebra_json);
    *out = new lbz_algebra{std::move(a)};
    return LBZ_OK;
  } catch (const std::exception& e) {
    session->last_error = e.what();
    return LBZ_USAGE_ERROR;
  }
}

void lbz_algebra_free(lbz_algebra* algebra) { delete algebra; }

int lbz_algebra_dim(const lbz_algebra* algebra) {
  return algebra ? static_cast<int>(algebra->value.dim()) : -1;
}

lbz_status lbz_cmd_verify(lbz_session* session, const lbz_algebra* algebra,
                          char** out_report) {
  return run_command(session, out_report, [&] {
    if (!algebra) throw usage_error("null algebra handle");
    return cmd_verify(session->config, algebra->value);
  });
}

lbz_status lbz_cmd_analyze(lbz_session* session, const lbz_algebra* algebra,
                           const char* request_json, char** out_report) {
  return run_command(session, out_report, [&] {
    if (!algebra) throw usage_error("null algebra handle");
    return cmd_analyze(session->config, algebra->value,
                       request_json ? request_json : "");
  });
}

lbz_status lbz_cmd_derivations(lbz_session* session, const lbz_algebra* algebra,
                               const char* kind, char** out_report) {
  return run_command(session, out_report, [&] {
    if (!algebra) throw usage_error("null algebra handle");
    if (!kind) throw usage_error("null kind");
    return cmd_derivations(session->config, algebra->value, kind);
  });
}

lbz_status lbz_cmd_hnn(lbz_session* session, const lbz_algebra* algebra,
                       const char* request_json, char** out_report) {
  return run_command(session, out_report, [&] {
    if (!algebra) throw usage_error("null algebra handle");
    if (!request_json) throw usage_error("null hnn request");
    return cmd_hnn(session->config, algebra->value, request_json);
  });
}

lbz_status lbz_cmd_solve(lbz_session* session, const lbz_algebra* algebra,
                         const char* request_json, char** out_report) {
  return run_command(session, out_report, [&] {
    if (!algebra) throw usage_error("null algebra handle");
    if (!request_json) throw usage_error("null solve request");
    return cmd_solve(session->config, algebra->value, request_json);
  });
}

lbz_status lbz_cmd_free_expr(lbz_session* session, const char* expr,
                             int dialgebra, char** out_report) {
  return run_command(session, out_report, [&] {
    if (!expr) throw usage_error("null expression");
    return cmd_free_expr(session->config, expr, dialgebra != 0);
  });
}

void lbz_string_free(char* s) { std::free(s); }

const char* lbz_version(void) { return "0.1.0"; }

}  // extern "C"
