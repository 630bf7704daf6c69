#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "treecount/constructions.hpp"
#include "treecount/graph.hpp"
#include "treecount/numeric.hpp"

namespace treecount {

inline constexpr std::size_t kDefaultTutteEdgeCap = 14;

/// Integer polynomial in x and y, stored sparsely as (i, j) -> coefficient of x^i y^j.
class TuttePolynomial {
 public:
  using Terms = std::map<std::pair<unsigned, unsigned>, Count>;

  TuttePolynomial() = default;
  explicit TuttePolynomial(Terms terms);
  static TuttePolynomial one();

  const Terms& terms() const { return terms_; }
  Count coefficient(unsigned i, unsigned j) const;

  Rational evaluate(const Rational& x, const Rational& y) const;

  TuttePolynomial& operator+=(const TuttePolynomial& other);
  /// Multiplies by x^i y^j.
  TuttePolynomial shifted(unsigned i, unsigned j) const;
  friend TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b);
  friend bool operator==(const TuttePolynomial& a, const TuttePolynomial& b) { return a.terms_ == b.terms_; }

  /// e.g. "x^2 + x + y"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void prune();
  Terms terms_;
};

/// Deletion-contraction with memoization. Throws CapExceeded when G has more
/// than `edge_cap` edges.
TuttePolynomial tutte_polynomial(const MultiGraph& g, std::size_t edge_cap = kDefaultTutteEdgeCap);

Rational evaluate(const TuttePolynomial& t, const Rational& x, const Rational& y);

struct IdentityCheck {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/// T_G * T_{K_|U|} against T_{G[U+S1]} * T_{G[U+S2]} at (x, y).
/// Throws HypothesisViolated or CapExceeded.
IdentityCheck clique_cut_identity(const MultiGraph& g, const CliqueCut& cut, const Rational& x, const Rational& y,
                                  std::size_t edge_cap = kDefaultTutteEdgeCap);

}  // namespace treecount
