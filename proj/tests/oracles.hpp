#pragma once

// Brute-force reference computations used to freeze expected values. They
// share no code with the library beyond the Rational/Integer types.

#include "wittcob/rational.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using wittcob::Integer;
using wittcob::Rational;

/// Squarefree integer in the square class of a nonzero rational, by trial
/// division over all divisors (inputs are small).
std::int64_t squarefree_part(const Rational& a);

/// (a, b)_p by searching for a primitive solution of z^2 = a x^2 + b y^2
/// modulo p^3 (odd p) or 2^5, after reducing a and b to squarefree integers.
/// Hensel's lemma makes that modulus sufficient. Requires p <= 13.
int hilbert_symbol_brute(const Rational& a, const Rational& b, std::int64_t p);

/// W(F_p) computed from anisotropic representatives: a diagonal form is
/// reduced by splitting off isotropic pairs <a, b> (-ab a square) and, in
/// rank 3, by brute-force isotropic vectors. Elements are keyed by
/// (anisotropic rank, discriminant is a square).
struct FpWittElement {
  int rank = 0;
  bool square_disc = true;
  friend bool operator==(const FpWittElement&, const FpWittElement&) = default;
};

class FpWittGroup {
 public:
  explicit FpWittGroup(std::int64_t p);

  FpWittElement of(const std::vector<std::int64_t>& entries) const;
  FpWittElement add(const FpWittElement& a, const FpWittElement& b) const;
  FpWittElement zero() const { return {}; }

  /// All elements generated by <1> and <g> for a nonresidue g.
  std::vector<FpWittElement> elements() const;
  int order(const FpWittElement& x) const;
  int exponent() const;

  std::int64_t prime() const { return p_; }
  bool is_square(std::int64_t a) const;
  /// A diagonal form in the class; its entries lie in [1, p).
  std::vector<std::int64_t> representative(const FpWittElement& x) const;
  std::int64_t nonresidue() const;

 private:
  std::int64_t p_;
  std::vector<bool> square_;
};

/// Number of distinct real roots in (lo, hi] of a squarefree polynomial
/// (coefficients low to high), by sign changes on a grid of step
/// separation/4. Exact only if distinct roots are at least `separation` apart.
int real_roots_by_grid(const std::vector<Rational>& coefficients, const Rational& lo, const Rational& hi,
                       const Rational& separation);

}  // namespace oracle
