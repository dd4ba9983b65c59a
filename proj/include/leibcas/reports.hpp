#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "leibcas/json_io.hpp"

namespace leibcas {

/// Options shared by the report commands. Deterministic: identical config
/// (seed included) yields byte-identical JSON.
struct RunConfig {
  std::size_t degree = 4;               // truncation bound N
  std::optional<Field> field_override;  // reinterpret loaded algebras
  unsigned long long budget = 1000000;  // enumeration budget
  std::string format = "json";          // "json" | "text"
  std::uint64_t seed = 0;
  bool force = false;                   // lifts the degree guard
  std::size_t samples = 100;            // randomized spot checks per report

  void validate() const;  // degree in [1,6] unless force; budget >= 1
};

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 usage, 2 mathematical rejection
  json report;

  std::string rendered(const std::string& format) const;
};

StructureAlgebra load_algebra(const RunConfig& cfg, const std::string& algebra_json);

CommandResult cmd_verify(const RunConfig& cfg, const StructureAlgebra& a);
/// request: optional {"subspaces": [[...vec...], ...]} for centralizer and
/// normalizer reports.
CommandResult cmd_analyze(const RunConfig& cfg, const StructureAlgebra& a,
                          const std::string& request_json);
/// kind: "derivation" | "anti" | "bider".
CommandResult cmd_derivations(const RunConfig& cfg, const StructureAlgebra& a,
                              const std::string& kind);
/// request: {"subalgebra": [[...]...], "images": [[...]...],
///           "kind": "derivation"|"anti", "degree"?: N}
CommandResult cmd_hnn(const RunConfig& cfg, const StructureAlgebra& a,
                      const std::string& request_json);
/// request: {"mode": "solve", "system": {...}}
///        | {"mode": "check", "system": {...}, "assignment": {...}}
///        | {"mode": "witness", "a": [...], "b": [...], "side": "left"|"right"}
CommandResult cmd_solve(const RunConfig& cfg, const StructureAlgebra& a,
                        const std::string& request_json);
CommandResult cmd_free_expr(const RunConfig& cfg, const std::string& expr,
                            bool dialgebra);

RunConfig config_from_json(const std::string& options_json);

}  // namespace leibcas
