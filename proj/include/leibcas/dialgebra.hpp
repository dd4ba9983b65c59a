#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibcas/free_leibniz.hpp"

namespace leibcas {

/// Free dialgebra monomial: a word with one distinguished (center) letter.
/// The left product keeps the left factor's center, the right product the
/// right factor's.
struct DialgMonomial {
  std::vector<std::uint32_t> word;
  std::size_t center = 0;  // index into word

  std::size_t degree() const { return word.size(); }

  bool operator==(const DialgMonomial& o) const = default;
  bool operator<(const DialgMonomial& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    if (word != o.word) return word < o.word;
    return center < o.center;
  }
};

class DialgElement {
 public:
  explicit DialgElement(const Field& f) : field_(f) {}

  static DialgElement zero(const Field& f) { return DialgElement(f); }
  static DialgElement generator(const Field& f, std::uint32_t i);
  static DialgElement monomial(const Field& f, DialgMonomial m, Scalar c);

  const Field& field() const { return field_; }
  const std::map<DialgMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  void add_term(const DialgMonomial& m, const Scalar& c);

  DialgElement operator+(const DialgElement& o) const;
  DialgElement operator-(const DialgElement& o) const;
  DialgElement operator-() const;
  DialgElement scaled(const Scalar& c) const;
  bool operator==(const DialgElement& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

  /// Rendering in product form, e.g. "x1 |- x2 -| x3" for the word x1 x2 x3
  /// centered on x2.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Field field_;
  std::map<DialgMonomial, Scalar> terms_;
};

/// Left product u -| v: concatenate, keep u's center.
DialgElement dprod_left(const DialgElement& u, const DialgElement& v);
/// Right product u |- v: concatenate, center moves to v's center.
DialgElement dprod_right(const DialgElement& u, const DialgElement& v);
/// [u, v] = u -| v - v |- u.
DialgElement dialg_bracket(const DialgElement& u, const DialgElement& v);

using DialgProduct =
    std::function<DialgElement(const DialgElement&, const DialgElement&)>;

struct AxiomWitness {
  std::string axiom;
  DialgMonomial x, y, z;
  DialgElement lhs, rhs;
};

struct AxiomsReport {
  bool ok = true;
  std::size_t triples_checked = 0;
  std::optional<AxiomWitness> witness;
};

/// Verifies associativity of both products and the three interchange laws.
/// Exhausts all monomial triples (words and center placements) of total
/// length <= exhaustive_total, then adds `samples` random larger triples.
/// Products are injectable so mutated variants can be exercised.
AxiomsReport axioms_check(const Field& f, std::size_t generators,
                          std::size_t exhaustive_total, std::size_t samples,
                          std::uint64_t seed,
                          const DialgProduct& left = dprod_left,
                          const DialgProduct& right = dprod_right);

/// Expansion of a left-normed Leibniz element in the free dialgebra via the
/// induced bracket.
DialgElement leibniz_to_dialg(const FreeElement& e);

/// Rewrites each relator through [x,y] = x -| y - y |- x.
std::vector<DialgElement> transfer_presentation(const std::vector<FreeElement>& s);

std::string dialg_monomial_to_string(const DialgMonomial& m,
                                     const std::vector<std::string>& names = {});

}  // namespace leibcas
