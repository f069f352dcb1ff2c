#include "wittcob/genus.hpp"

#include <set>
#include <stdexcept>

namespace wittcob {

namespace {

int minus_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<std::string> HodgeDiamond::violations() const {
  std::vector<std::string> out;
  if (n < 0) return {"negative dimension"};
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  if (h.size() != size) return {"diamond must have " + std::to_string(size) + " rows"};
  for (const auto& row : h)
    if (row.size() != size) return {"diamond rows must have " + std::to_string(size) + " entries"};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const std::string at = "h^{" + std::to_string(p) + "," + std::to_string(q) + "}";
      if (h[p][q] < 0) out.push_back(at + " is negative");
      if (h[p][q] != h[q][p]) out.push_back(at + " != h^{q,p}");
      if (h[p][q] != h[n - p][n - q]) out.push_back(at + " != h^{n-p,n-q}");
    }
  if (h[0][0] < 1) out.push_back("h^{0,0} must be at least 1");
  return out;
}

HodgeDiamond point_diamond() { return {0, {{1}}}; }

HodgeDiamond projective_plane_diamond() { return {2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

HodgeDiamond k3_diamond() { return {2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}}; }

long YPolynomial::operator()(long y) const {
  long value = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * y + *it;
  return value;
}

std::string YPolynomial::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (c[p] == 0) continue;
    const long a = c[p] < 0 ? -c[p] : c[p];
    if (out.empty())
      out += c[p] < 0 ? "-" : "";
    else
      out += c[p] < 0 ? " - " : " + ";
    if (a != 1 || p == 0) out += std::to_string(a);
    if (p >= 1) out += "y";
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out.empty() ? "0" : out;
}

YPolynomial chi_y(const HodgeDiamond& d) {
  const auto bad = d.violations();
  if (!bad.empty()) throw std::invalid_argument("invalid Hodge diamond: " + bad.front());
  YPolynomial out;
  out.c.assign(d.n + 1, 0);
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) out.c[p] += minus_one_pow(q) * d.h[p][q];
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

Specialization specialize(const YPolynomial& chi, int dimension) {
  return {chi(-1), chi(0), chi(1), dimension % 2 == 0};
}

int epsilon(long m) {
  // m(m+1)/2 mod 2 depends only on m mod 4.
  const long r = ((m % 4) + 4) % 4;
  return (r == 0 || r == 3) ? 1 : -1;
}

bool epsilon_pair_rule(long m) {
  const long i = (m % 2 == 0) ? m / 2 : (m + 1) / 2;
  return epsilon(m) == minus_one_pow(i);
}

LefschetzCheck lefschetz_cancellation_check(const std::vector<PrimitivePiece>& pieces, int w) {
  LefschetzCheck out;
  std::set<int> seen;
  for (const auto& piece : pieces) {
    if (piece.j < 0) throw std::invalid_argument("primitive piece with negative j = " + std::to_string(piece.j));
    if (!seen.insert(piece.j).second) throw std::invalid_argument("duplicate primitive piece j = " + std::to_string(piece.j));
  }
  const int ew = epsilon(w);
  bool converted_ok = true;
  out.odd_pieces_vanish = true;
  for (const auto& piece : pieces) {
    const int j = piece.j;
    long inner = 0;
    for (int k = 0; k <= j; ++k) inner += epsilon(static_cast<long>(w) - j + 2 * k);
    const long lhs = minus_one_pow(j) * inner;
    const long rhs = (j % 2 == 0) ? ew * minus_one_pow(j / 2) : 0;
    const long converted = (j % 2 == 0) ? minus_one_pow(static_cast<long>(j) * (j - 1) / 2) : 0;
    out.lhs[j] = lhs;
    out.rhs[j] = rhs;
    out.converted[j] = converted;
    out.lhs_value += lhs * piece.signature;
    out.rhs_value += rhs * piece.signature;
    if (j % 2 == 1 && lhs != 0) out.odd_pieces_vanish = false;
    if (ew * converted != rhs) converted_ok = false;
  }
  out.equal = out.lhs == out.rhs && converted_ok && out.lhs_value == out.rhs_value;
  return out;
}

SignDictionaryCheck sign_dictionary_check(long d, long d_prime) {
  SignDictionaryCheck out;
  const long e = d - d_prime;
  out.lhs = e * (e + 1) / 2 + e * d_prime;
  out.rhs = d * (d - 1) / 2 - d_prime * (d_prime - 1) / 2 + e;
  out.identity = out.lhs == out.rhs;
  out.shift_identity = d * (d - 1) / 2 + d == d * (d + 1) / 2;
  return out;
}

IsolatedPointReport isolated_point_example(const SurfaceHodgeData& surface) {
  if (surface.degree < 1 || surface.h11 < 1 || surface.h20 < 0)
    throw std::invalid_argument("surface data needs degree >= 1, h11 >= 1, h20 >= 0");
  IsolatedPointReport out;
  out.surface = surface;
  out.signature_H2 = 2 + 2 * surface.h20 - surface.h11;
  out.primitive_dimension = surface.h11 - 1 + 2 * surface.h20;
  out.primitive_signature = out.signature_H2 - 1;
  // [Q_P] = <1> cancels the non-primitive <m> over R; the primitive part survives.
  out.residual = 1 - out.signature_H2;
  out.obstruction = out.residual != 0;
  return out;
}

DoublePointReport double_point_example() {
  DoublePointReport out;
  const std::vector<Rational> entries{Rational(1), Rational(-2)};
  out.canonical = witt_class_of_diagonal({Rational(1)});
  out.induced = witt_class_of_diagonal({Rational(-2)});
  out.sum = witt_class_of_diagonal(entries);
  out.psi1_at_2 = psi(entries, Integer(2), 1);
  out.psi0_at_3 = psi(entries, Integer(3), 0);
  out.psi0_at_3_order = out.psi0_at_3.order();
  out.nonzero_by_psi1_at_2 = !out.psi1_at_2.is_zero();
  out.nonzero_by_psi0_at_3 = !out.psi0_at_3.is_zero();
  const BilinearForm f = BilinearForm::diagonal(entries);
  const BilinearForm zero(QMatrix(0, 0), Symmetry::symmetric);
  out.nonzero_by_hasse = !witt_equal_by_hasse(f, zero);
  return out;
}

}  // namespace wittcob
