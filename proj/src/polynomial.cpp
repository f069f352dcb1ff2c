#include "wittcob/polynomial.hpp"

#include "wittcob/numtheory.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wittcob {

namespace {

int sign_variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_at_infinity(const Polynomial& p, bool positive) {
  if (p.is_zero()) return 0;
  const int lead = sgn(p.leading());
  return (positive || p.degree() % 2 == 0) ? lead : -lead;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t count = out.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QMatrix Polynomial::operator()(const QMatrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
  QMatrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = leading();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += wittcob::to_string(mag);
    if (k >= 1) out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coefficients();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k + b.degree());
    const Rational factor = rem[top] / b.leading();
    quot[static_cast<std::size_t>(k)] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= factor * bc[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

Polynomial characteristic_polynomial(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const QMatrix am = m * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  // Strip the factor t^k, then clear denominators and apply the rational root test.
  std::set<Rational> roots;
  std::vector<Rational> coeffs = p.coefficients();
  std::size_t shift = 0;
  while (shift < coeffs.size() && sgn(coeffs[shift]) == 0) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(shift));
  if (coeffs.size() <= 1) return {roots.begin(), roots.end()};
  Integer lcm_den = 1;
  for (const auto& x : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> ints;
  for (const auto& x : coeffs) ints.push_back(Integer(x * lcm_den));
  const Polynomial reduced(std::vector<Rational>(coeffs.begin(), coeffs.end()));
  for (const auto& num : divisors(ints.front())) {
    for (const auto& den : divisors(ints.back())) {
      for (int s : {1, -1}) {
        Rational cand(num * s, den);
        cand.canonicalize();
        if (sgn(reduced(cand)) == 0) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p};
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    Polynomial r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

SturmCounts sturm_positive_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  SturmCounts out;
  const Polynomial core = squarefree_part(p);
  out.squarefree = gcd(p, p.derivative()).degree() <= 0;
  // Roots in (0, inf) of t * q(t) are those of q; remove a root at 0 first.
  Polynomial q = core;
  const bool zero_root = sgn(q(Rational(0))) == 0;
  if (zero_root) q = divmod(q, Polynomial({Rational(0), Rational(1)})).first;
  const auto chain = sturm_chain(q);
  std::vector<int> at_zero, at_pos, at_neg;
  for (const auto& s : chain) {
    at_zero.push_back(sgn(s(Rational(0))));
    at_pos.push_back(sign_at_infinity(s, true));
    at_neg.push_back(sign_at_infinity(s, false));
  }
  out.positive_roots = sign_variations(at_zero) - sign_variations(at_pos);
  out.real_roots = sign_variations(at_neg) - sign_variations(at_pos) + (zero_root ? 1 : 0);
  out.all_real = out.real_roots == core.degree();
  return out;
}

}  // namespace wittcob
