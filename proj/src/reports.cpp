#include "leibcas/reports.hpp"

#include <sstream>

#include "leibcas/errors.hpp"
#include "leibcas/expr_parser.hpp"
#include "leibcas/rng.hpp"

namespace leibcas {

namespace {

constexpr int kSchemaVersion = 1;

json base_report(const std::string& command, const RunConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["seed"] = cfg.seed;
  return j;
}

json violation_to_json(const LeibnizViolation& v) {
  json j;
  j["triple"] = {v.i, v.j, v.k};
  j["lhs"] = vec_to_json(v.lhs);
  j["rhs"] = vec_to_json(v.rhs);
  return j;
}

json parse_request(const std::string& text) {
  if (text.empty()) return json::object();
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw usage_error("malformed request JSON");
  return j;
}

void render_text(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << pad << key << ":\n";
        render_text(out, value, indent + 1);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const json& value : j) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        render_text(out, value, indent + 1);
      } else {
        out << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

}  // namespace

void RunConfig::validate() const {
  if (budget < 1) throw usage_error("budget must be >= 1");
  if (!force && (degree < 1 || degree > 6)) {
    throw usage_error("degree must lie in [1,6]; pass --force to override");
  }
  if (degree < 1) throw usage_error("degree must be >= 1");
  if (format != "json" && format != "text") {
    throw usage_error("format must be json or text");
  }
}

std::string CommandResult::rendered(const std::string& format) const {
  if (format == "text") {
    std::ostringstream out;
    render_text(out, report, 0);
    return out.str();
  }
  return report.dump(2) + "\n";
}

StructureAlgebra load_algebra(const RunConfig& cfg, const std::string& algebra_json) {
  StructureAlgebra a = algebra_from_json_text(algebra_json);
  if (cfg.field_override && !(a.field() == *cfg.field_override)) {
    return a.change_field(*cfg.field_override);
  }
  return a;
}

RunConfig config_from_json(const std::string& options_json) {
  RunConfig cfg;
  if (options_json.empty()) return cfg;
  json j = json::parse(options_json, nullptr, false);
  if (j.is_discarded()) throw usage_error("malformed options JSON");
  if (j.contains("degree")) cfg.degree = j.at("degree").get<std::size_t>();
  if (j.contains("budget")) cfg.budget = j.at("budget").get<unsigned long long>();
  if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("force")) cfg.force = j.at("force").get<bool>();
  if (j.contains("samples")) cfg.samples = j.at("samples").get<std::size_t>();
  if (j.contains("field")) {
    cfg.field_override = Field::parse(j.at("field").get<std::string>());
  }
  cfg.validate();
  return cfg;
}

CommandResult cmd_verify(const RunConfig& cfg, const StructureAlgebra& a) {
  CommandResult result;
  result.report = base_report("verify", cfg);
  result.report["field"] = a.field().to_string();
  result.report["dim"] = a.dim();
  const LeibnizReport& rep = a.verify_leibniz();
  result.report["leibniz"] = rep.ok;
  json violations = json::array();
  for (const LeibnizViolation& v : rep.violations) violations.push_back(violation_to_json(v));
  result.report["violations"] = std::move(violations);

  if (rep.ok) {
    // Sampled trilinearity consistency: the identity on random elements.
    Rng rng(cfg.seed);
    bool sampled_ok = true;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      Vec x = rng.element(a.field(), a.dim());
      Vec y = rng.element(a.field(), a.dim());
      Vec z = rng.element(a.field(), a.dim());
      Vec lhs = a.bracket(a.bracket(x, y), z);
      Vec rhs = vec_add(a.bracket(a.bracket(x, z), y), a.bracket(x, a.bracket(y, z)));
      if (lhs != rhs) {
        sampled_ok = false;
        break;
      }
    }
    result.report["sampled_triples"] = cfg.samples;
    result.report["sampled_ok"] = sampled_ok;
  }
  result.exit_code = rep.ok ? 0 : 2;
  return result;
}

CommandResult cmd_analyze(const RunConfig& cfg, const StructureAlgebra& a,
                          const std::string& request_json) {
  CommandResult result;
  result.report = base_report("analyze", cfg);
  result.report["field"] = a.field().to_string();
  result.report["dim"] = a.dim();
  const LeibnizReport& rep = a.verify_leibniz();
  result.report["leibniz"] = rep.ok;
  if (!rep.ok) {
    json violations = json::array();
    for (const LeibnizViolation& v : rep.violations) violations.push_back(violation_to_json(v));
    result.report["violations"] = std::move(violations);
    result.exit_code = 2;
    return result;
  }

  DerivedSeries series = a.derived_series();
  json dims = json::array();
  for (const Subspace& s : series.terms) dims.push_back(s.dim());
  result.report["derived_series"] = {{"dims", dims},
                                     {"solvable", series.solvable},
                                     {"stabilization_index", series.stabilization_index}};

  SimplicityVerdict simple = a.is_simple();
  json sj;
  sj["simple"] = simple.simple;
  sj["complete"] = simple.complete;
  sj["lines_checked"] = simple.lines_checked;
  sj["warnings"] = simple.warnings;
  if (simple.counterexample_ideal) {
    sj["counterexample_ideal"] = subspace_to_json(*simple.counterexample_ideal);
  }
  sj["derived_ideal_dim"] = simple.derived_ideal.dim();
  result.report["simplicity"] = std::move(sj);

  json request = parse_request(request_json);
  if (request.contains("subspaces")) {
    json entries = json::array();
    for (const json& sub : request.at("subspaces")) {
      Subspace s = subspace_from_json(a.field(), a.dim(), sub);
      json entry;
      entry["subspace"] = subspace_to_json(s);
      entry["is_subalgebra"] = a.is_subalgebra(s);
      entry["is_left_ideal"] = a.is_left_ideal(s);
      entry["is_right_ideal"] = a.is_right_ideal(s);
      entry["centralizer"] = subspace_to_json(centralizer(a, s.basis()));
      NormalizerResult nz = normalizer(a, s);
      entry["normalizer"] = {{"left", subspace_to_json(nz.left)},
                             {"right", subspace_to_json(nz.right)},
                             {"both", subspace_to_json(nz.both)}};
      entries.push_back(std::move(entry));
    }
    result.report["subspaces"] = std::move(entries);
  }
  return result;
}

CommandResult cmd_derivations(const RunConfig& cfg, const StructureAlgebra& a,
                              const std::string& kind) {
  CommandResult result;
  result.report = base_report("derivations", cfg);
  result.report["kind"] = kind;
  result.report["dim"] = a.dim();
  if (!a.is_leibniz()) {
    result.report["leibniz"] = false;
    result.exit_code = 2;
    return result;
  }
  Subspace space;
  if (kind == "derivation") {
    space = derivation_space(a);
  } else if (kind == "anti") {
    space = antiderivation_space(a);
  } else if (kind == "bider") {
    space = biderivation_space(a);
  } else {
    throw usage_error("kind must be derivation, anti, or bider");
  }
  result.report["space_dim"] = space.dim();
  json basis = json::array();
  for (const Vec& v : space.basis()) basis.push_back(vec_to_json(v));
  result.report["basis"] = std::move(basis);
  return result;
}

CommandResult cmd_hnn(const RunConfig& cfg, const StructureAlgebra& a,
                      const std::string& request_json) {
  json request = parse_request(request_json);
  if (!request.contains("subalgebra") || !request.contains("images") ||
      !request.contains("kind")) {
    throw usage_error("hnn request needs subalgebra, images, kind");
  }
  const std::size_t degree =
      request.contains("degree") ? request.at("degree").get<std::size_t>() : cfg.degree;
  if (!cfg.force && degree > 6) {
    throw usage_error("degree must lie in [1,6]; pass --force to override");
  }
  const std::string kind_name = request.at("kind").get<std::string>();
  HnnKind kind;
  if (kind_name == "derivation") {
    kind = HnnKind::derivation;
  } else if (kind_name == "anti") {
    kind = HnnKind::anti_derivation;
  } else {
    throw usage_error("kind must be derivation or anti");
  }

  const Field& f = a.field();
  // Generators of A with per-generator images; convert to the canonical
  // basis before extending.
  std::vector<Vec> gens;
  for (const json& g : request.at("subalgebra")) gens.push_back(vec_from_json(f, a.dim(), g));
  std::vector<Vec> images;
  for (const json& g : request.at("images")) images.push_back(vec_from_json(f, a.dim(), g));
  if (gens.size() != images.size()) {
    throw usage_error("subalgebra and images must have the same length");
  }
  Subspace domain = Subspace::span(f, a.dim(), gens);
  if (domain.dim() != gens.size()) {
    throw usage_error("subalgebra generators must be linearly independent");
  }
  // Canonical basis vector b_s = sum_u T_su g_u; image(b_s) = sum_u T_su m_u.
  Matrix gen_cols = Matrix::from_columns(f, gens, a.dim());
  Matrix canonical_images(f, a.dim(), domain.dim());
  for (std::size_t s = 0; s < domain.dim(); ++s) {
    auto t = solve(gen_cols, domain.basis()[s]);
    if (!t) throw invariant_violation("canonical basis escaped its own span");
    Vec img = vec_zero(f, a.dim());
    for (std::size_t u = 0; u < gens.size(); ++u) {
      img = vec_add(img, vec_scale((*t)[u], images[u]));
    }
    for (std::size_t r = 0; r < a.dim(); ++r) canonical_images.at(r, s) = img[r];
  }
  MapOnSubspace map{domain, std::move(canonical_images)};

  CommandResult result;
  result.report = base_report("hnn", cfg);
  result.report["kind"] = kind_name;
  result.report["base_dim"] = a.dim();
  result.report["subalgebra_dim"] = domain.dim();

  HnnExtension h = hnn_extend(a, domain, map, kind);
  result.report["relators"] = h.presentation.relators.size();

  EmbeddingVerdict verdict = embedding_check(h, degree);
  result.report["status"] = verdict.status;
  result.report["degree"] = verdict.degree;
  result.report["quotient_dims_per_degree"] = verdict.quotient_dims;
  result.report["semantics"] = verdict.semantics;
  if (verdict.witness) {
    result.report["witness"] = verdict.witness->to_string(h.presentation.names);
  }

  ExactModelResult exact = exact_model_check(h);
  json ej;
  switch (exact.status) {
    case ExactModelStatus::model: {
      ej["status"] = "model";
      ej["dim"] = exact.model->dim();
      ej["algebra"] = algebra_to_json(*exact.model);
      ej["embedding"] = matrix_to_json(*exact.embedding);
      break;
    }
    case ExactModelStatus::rejected: {
      ej["status"] = "rejected";
      json violations = json::array();
      for (const LeibnizViolation& v : exact.failure->violations) {
        violations.push_back(violation_to_json(v));
      }
      ej["violations"] = std::move(violations);
      break;
    }
    case ExactModelStatus::absent_free_product:
      ej["status"] = "absent-free-product";
      break;
    case ExactModelStatus::not_covered:
      ej["status"] = "not-covered";
      break;
  }
  result.report["exact_model"] = std::move(ej);
  result.exit_code = verdict.collapse ? 2 : 0;
  return result;
}

CommandResult cmd_solve(const RunConfig& cfg, const StructureAlgebra& a,
                        const std::string& request_json) {
  json request = parse_request(request_json);
  const std::string mode =
      request.contains("mode") ? request.at("mode").get<std::string>() : "solve";
  CommandResult result;
  result.report = base_report("solve", cfg);
  result.report["mode"] = mode;

  if (mode == "solve") {
    EqSystem s = system_from_json(a.field(), a.dim(), request.at("system"));
    SolveResult r = solve_in(s, a, cfg.budget);
    result.report["budget"] = cfg.budget;
    result.report["tried"] = r.tried;
    result.report["total"] = r.total;
    switch (r.status) {
      case SolveStatus::found:
        result.report["status"] = "found";
        result.report["assignment"] = assignment_to_json(*r.assignment);
        break;
      case SolveStatus::no_solution:
        result.report["status"] = "no-solution";
        result.report["note"] =
            "complete decision: enumeration covered every assignment and was "
            "re-checked in reverse order";
        break;
      case SolveStatus::undecided_budget:
        result.report["status"] = "undecided-budget";
        break;
    }
    return result;
  }

  if (mode == "check") {
    EqSystem s = system_from_json(a.field(), a.dim(), request.at("system"));
    Assignment asg = assignment_from_json(a.field(), a.dim(), request.at("assignment"));
    CheckReport r = check_solution(s, asg, a, Matrix::identity(a.field(), a.dim()));
    result.report["ok"] = r.ok;
    json constraints = json::array();
    for (const ConstraintReport& c : r.constraints) {
      constraints.push_back({{"kind", c.is_equation ? "eq" : "neq"},
                             {"ok", c.ok},
                             {"value", vec_to_json(c.value)}});
    }
    result.report["constraints"] = std::move(constraints);
    result.exit_code = r.ok ? 0 : 2;
    return result;
  }

  if (mode == "witness") {
    Vec va = vec_from_json(a.field(), a.dim(), request.at("a"));
    Vec vb = vec_from_json(a.field(), a.dim(), request.at("b"));
    const std::string side_name = request.at("side").get<std::string>();
    DivisionSide side;
    if (side_name == "left") {
      side = DivisionSide::left;
    } else if (side_name == "right") {
      side = DivisionSide::right;
    } else {
      throw usage_error("side must be left or right");
    }
    const bool span_domain =
        request.contains("span_domain") && request.at("span_domain").get<bool>();
    DivisionWitness w = division_witness(a, va, vb, side, cfg.degree, span_domain);
    result.report["side"] = side_name;
    result.report["equation"] =
        side == DivisionSide::right ? "[a, y] = b" : "[x, a] = b";
    switch (w.status) {
      case WitnessStatus::verified_exact:
        result.report["status"] = "verified-exact";
        break;
      case WitnessStatus::verified_truncated:
        result.report["status"] = "verified-truncated";
        break;
      case WitnessStatus::collapse:
        result.report["status"] = "collapse";
        break;
      case WitnessStatus::assignment_inconsistent:
        result.report["status"] = "assignment-inconsistent";
        break;
    }
    result.report["detail"] = w.detail;
    result.report["witness"] = "t (the adjoined letter)";
    result.report["relator_check"] = w.relator_check;
    if (w.embedding) {
      result.report["embedding_status"] = w.embedding->status;
      result.report["quotient_dims_per_degree"] = w.embedding->quotient_dims;
    }
    if (w.extension) {
      result.report["subalgebra_dim"] = w.extension->subalgebra.dim();
    }
    if (w.exact.status == ExactModelStatus::model) {
      result.report["exact_model_dim"] = w.exact.model->dim();
    }
    result.exit_code = (w.status == WitnessStatus::verified_exact ||
                        w.status == WitnessStatus::verified_truncated)
                           ? 0
                           : 2;
    return result;
  }

  throw usage_error("mode must be solve, check, or witness");
}

CommandResult cmd_free_expr(const RunConfig& cfg, const std::string& expr,
                            bool dialgebra) {
  CommandResult result;
  result.report = base_report("free", cfg);
  const Field f = cfg.field_override.value_or(Field::rationals());
  const std::size_t cap = cfg.force ? 0 : std::max<std::size_t>(cfg.degree, 6);
  ParsedExpr parsed = parse_expression(f, expr, dialgebra, cap);
  result.report["input"] = expr;
  result.report["field"] = f.to_string();
  if (std::holds_alternative<DialgElement>(parsed.value)) {
    const DialgElement& e = std::get<DialgElement>(parsed.value);
    result.report["mode"] = "dialgebra";
    result.report["normal_form"] = e.to_string();
    result.report["terms"] = e.terms().size();
    result.report["degree"] = e.degree();
  } else {
    const FreeElement& e = std::get<FreeElement>(parsed.value);
    result.report["mode"] = "leibniz";
    result.report["normal_form"] = e.to_string();
    result.report["terms"] = e.term_count();
    result.report["degree"] = e.degree();
  }
  return result;
}

}  // namespace leibcas
