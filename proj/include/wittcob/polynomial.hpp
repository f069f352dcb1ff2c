#pragma once

#include "wittcob/matrix.hpp"
#include "wittcob/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wittcob {

/// Univariate polynomial over Q, coefficients stored lowest degree first with
/// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  QMatrix operator()(const QMatrix& m) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

/// Characteristic polynomial det(t I - m).
Polynomial characteristic_polynomial(const QMatrix& m);

/// Distinct rational roots of p, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

struct SturmCounts {
  int positive_roots = 0;  // distinct real roots in (0, inf)
  int real_roots = 0;      // distinct real roots in (-inf, inf)
  bool all_real = false;   // every complex root is real
  bool squarefree = false; // gcd(p, p') is constant
};

/// Throws std::invalid_argument on the zero polynomial.
SturmCounts sturm_positive_real_roots(const Polynomial& p);

/// The Sturm chain p, p', -rem(...), ... of p.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

}  // namespace wittcob
