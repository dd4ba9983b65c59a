// Command-line front end. Talks to the core exclusively through the C API so
// it doubles as a smoke test of the shared-library surface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "leibcas.h"

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct SessionDeleter {
  void operator()(lbz_session* s) const { lbz_session_free(s); }
};
struct AlgebraDeleter {
  void operator()(lbz_algebra* a) const { lbz_algebra_free(a); }
};

struct CommonOpts {
  std::size_t degree = 4;
  std::string field;
  unsigned long long budget = 1000000;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool force = false;
  std::size_t samples = 100;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--degree", opts.degree, "truncation degree bound N (1..6)");
  cmd->add_option("--field", opts.field, "field override: Q or gfp:<p>");
  cmd->add_option("--budget", opts.budget, "enumeration budget");
  cmd->add_option("--format", opts.format, "output format: json or text");
  cmd->add_option("--seed", opts.seed, "seed for randomized spot checks");
  cmd->add_flag("--force", opts.force, "lift the degree guard");
  cmd->add_option("--samples", opts.samples, "random samples per report");
}

std::string options_json(const CommonOpts& opts) {
  json j;
  j["degree"] = opts.degree;
  j["budget"] = opts.budget;
  j["format"] = opts.format;
  j["seed"] = opts.seed;
  j["force"] = opts.force;
  j["samples"] = opts.samples;
  if (!opts.field.empty()) j["field"] = opts.field;
  return j.dump();
}

using Session = std::unique_ptr<lbz_session, SessionDeleter>;
using Algebra = std::unique_ptr<lbz_algebra, AlgebraDeleter>;

Session open_session(const CommonOpts& opts) {
  lbz_session* raw = nullptr;
  if (lbz_session_new(options_json(opts).c_str(), &raw) != LBZ_OK) {
    std::cerr << "error: bad options\n";
    std::exit(1);
  }
  return Session(raw);
}

Algebra open_algebra(lbz_session* session, const std::string& path) {
  lbz_algebra* raw = nullptr;
  if (lbz_algebra_from_json(session, read_file(path).c_str(), &raw) != LBZ_OK) {
    std::cerr << "error: " << lbz_session_last_error(session) << "\n";
    std::exit(1);
  }
  return Algebra(raw);
}

int finish(lbz_session* session, lbz_status status, char* report) {
  if (report) {
    std::cout << report;
    lbz_string_free(report);
  }
  if (status == LBZ_USAGE_ERROR) {
    std::cerr << "error: " << lbz_session_last_error(session) << "\n";
    return 1;
  }
  return status == LBZ_MATH_REJECT ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for right Leibniz algebras"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "check the defining identity");
  std::string verify_path;
  CommonOpts verify_opts;
  verify->add_option("algebra", verify_path, "algebra JSON file")->required();
  add_common(verify, verify_opts);

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "derived series, simplicity, centralizers/normalizers");
  std::string analyze_path;
  std::vector<std::string> analyze_subs;
  CommonOpts analyze_opts;
  analyze->add_option("algebra", analyze_path, "algebra JSON file")->required();
  analyze->add_option("--sub", analyze_subs,
                      "subspace JSON file ({\"basis\": [[...]]}); repeatable");
  add_common(analyze, analyze_opts);

  // derivations
  auto* derivations =
      app.add_subcommand("derivations", "derivation/anti/bider space bases");
  std::string derivations_path, derivations_kind = "derivation";
  CommonOpts derivations_opts;
  derivations->add_option("algebra", derivations_path, "algebra JSON file")->required();
  derivations->add_option("--kind", derivations_kind, "derivation | anti | bider");
  add_common(derivations, derivations_opts);

  // hnn
  auto* hnn = app.add_subcommand(
      "hnn", "stable-letter extension and truncated independence check");
  std::string hnn_path, hnn_sub, hnn_map, hnn_kind = "derivation";
  CommonOpts hnn_opts;
  hnn->add_option("algebra", hnn_path, "algebra JSON file")->required();
  hnn->add_option("--sub", hnn_sub, "subalgebra JSON file ({\"basis\": [[...]]})")
      ->required();
  hnn->add_option("--map", hnn_map,
                  "map JSON file ({\"images\": [[...]]}, one image per basis "
                  "vector)")
      ->required();
  hnn->add_option("--kind", hnn_kind, "derivation | anti");
  add_common(hnn, hnn_opts);

  // solve
  auto* solve = app.add_subcommand("solve", "equation systems over the algebra");
  std::string solve_path, solve_system, solve_mode = "solve", solve_assignment;
  std::string solve_a, solve_b, solve_side = "right";
  CommonOpts solve_opts;
  solve->add_option("algebra", solve_path, "algebra JSON file")->required();
  solve->add_option("--system", solve_system, "system JSON file");
  solve->add_option("--mode", solve_mode, "solve | check | witness");
  solve->add_option("--assignment", solve_assignment,
                    "assignment JSON file (check mode)");
  solve->add_option("--a", solve_a, "JSON coordinates of a (witness mode)");
  solve->add_option("--b", solve_b, "JSON coordinates of b (witness mode)");
  solve->add_option("--side", solve_side, "left | right (witness mode)");
  add_common(solve, solve_opts);

  // free
  auto* free_cmd =
      app.add_subcommand("free", "normal form of a free-algebra expression");
  std::string free_expr;
  bool free_dialg = false;
  CommonOpts free_opts;
  free_cmd->add_option("expr", free_expr, "expression, e.g. \"[x1,[x2,x3]]\"")
      ->required();
  free_cmd->add_flag("--dialg", free_dialg, "evaluate in the free dialgebra");
  add_common(free_cmd, free_opts);

  CLI11_PARSE(app, argc, argv);

  char* report = nullptr;

  if (*verify) {
    Session session = open_session(verify_opts);
    Algebra algebra = open_algebra(session.get(), verify_path);
    lbz_status st = lbz_cmd_verify(session.get(), algebra.get(), &report);
    return finish(session.get(), st, report);
  }

  if (*analyze) {
    Session session = open_session(analyze_opts);
    Algebra algebra = open_algebra(session.get(), analyze_path);
    json request = json::object();
    if (!analyze_subs.empty()) {
      json subs = json::array();
      for (const std::string& path : analyze_subs) {
        subs.push_back(json::parse(read_file(path)));
      }
      request["subspaces"] = std::move(subs);
    }
    lbz_status st = lbz_cmd_analyze(session.get(), algebra.get(),
                                    request.dump().c_str(), &report);
    return finish(session.get(), st, report);
  }

  if (*derivations) {
    Session session = open_session(derivations_opts);
    Algebra algebra = open_algebra(session.get(), derivations_path);
    lbz_status st = lbz_cmd_derivations(session.get(), algebra.get(),
                                        derivations_kind.c_str(), &report);
    return finish(session.get(), st, report);
  }

  if (*hnn) {
    Session session = open_session(hnn_opts);
    Algebra algebra = open_algebra(session.get(), hnn_path);
    json sub = json::parse(read_file(hnn_sub));
    json map = json::parse(read_file(hnn_map));
    json request;
    request["subalgebra"] = sub.is_object() ? sub.at("basis") : sub;
    request["images"] = map.is_object() ? map.at("images") : map;
    request["kind"] = hnn_kind;
    request["degree"] = hnn_opts.degree;
    lbz_status st = lbz_cmd_hnn(session.get(), algebra.get(),
                                request.dump().c_str(), &report);
    return finish(session.get(), st, report);
  }

  if (*solve) {
    Session session = open_session(solve_opts);
    Algebra algebra = open_algebra(session.get(), solve_path);
    json request;
    request["mode"] = solve_mode;
    if (solve_mode == "witness") {
      if (solve_a.empty() || solve_b.empty()) {
        std::cerr << "error: witness mode needs --a and --b\n";
        return 1;
      }
      request["a"] = json::parse(solve_a);
      request["b"] = json::parse(solve_b);
      request["side"] = solve_side;
    } else {
      if (solve_system.empty()) {
        std::cerr << "error: " << solve_mode << " mode needs --system\n";
        return 1;
      }
      request["system"] = json::parse(read_file(solve_system));
      if (solve_mode == "check") {
        if (solve_assignment.empty()) {
          std::cerr << "error: check mode needs --assignment\n";
          return 1;
        }
        request["assignment"] = json::parse(read_file(solve_assignment));
      }
    }
    lbz_status st = lbz_cmd_solve(session.get(), algebra.get(),
                                  request.dump().c_str(), &report);
    return finish(session.get(), st, report);
  }

  if (*free_cmd) {
    Session session = open_session(free_opts);
    lbz_status st = lbz_cmd_free_expr(session.get(), free_expr.c_str(),
                                      free_dialg ? 1 : 0, &report);
    return finish(session.get(), st, report);
  }

  return 1;
}
