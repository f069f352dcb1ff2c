#include "wittcob/witt.hpp"

#include <set>
#include <stdexcept>

namespace wittcob {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<Rational> nondegenerate_entries(const BilinearForm& f) {
  return diagonalize(radical_split(f).nondegenerate).entries;
}

void require_rational_symmetric(const BilinearForm& f, const char* what) {
  if (!f.over_rationals()) throw std::invalid_argument(std::string(what) + ": form must be over Q");
}

}  // namespace

WittClassFp::Kind WittClassFp::kind_of(const Integer& p) {
  if (p == 2) return Kind::two;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), p.get_mpz_t(), 4);
  return r == 3 ? Kind::three_mod_four : Kind::one_mod_four;
}

WittClassFp::WittClassFp(Integer p) : WittClassFp(std::move(p), 0, false) {}

WittClassFp::WittClassFp(Integer p, int value, bool nonresidue_disc) : p_(std::move(p)) {
  if (!is_prime(p_)) throw std::invalid_argument("W(F_p): " + p_.get_str() + " is not prime");
  kind_ = kind_of(p_);
  switch (kind_) {
    case Kind::two:
      value_ = mod(value, 2);
      break;
    case Kind::three_mod_four:
      value_ = mod(value, 4);
      break;
    case Kind::one_mod_four:
      value_ = mod(value, 2);
      nonresidue_ = nonresidue_disc;
      break;
  }
}

int WittClassFp::order() const {
  if (is_zero()) return 1;
  if (kind_ == Kind::three_mod_four && value_ % 2 == 1) return 4;
  return 2;
}

WittClassFp operator+(const WittClassFp& a, const WittClassFp& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("adding classes over different prime fields");
  return WittClassFp(a.p_, a.value_ + b.value_, a.nonresidue_ != b.nonresidue_);
}

WittClassFp operator-(const WittClassFp& a) { return WittClassFp(a.p_, -a.value_, a.nonresidue_); }

std::string WittClassFp::to_string() const {
  switch (kind_) {
    case Kind::two:
      return "Z/2:" + std::to_string(value_);
    case Kind::three_mod_four:
      return "Z/4:" + std::to_string(value_);
    case Kind::one_mod_four:
      return "Z/2xZ/2:(" + std::to_string(value_) + "," + (nonresidue_ ? "nonresidue" : "residue") + ")";
  }
  return {};
}

WittClassFp unit_class(const Integer& p) { return WittClassFp(p, 1, false); }

WittClassFp fp_class_of(const std::vector<Integer>& entries, const Integer& p) {
  if (p == 2) throw std::invalid_argument("use rank parity directly");
  if (!is_prime(p)) throw std::invalid_argument("fp_class_of: " + p.get_str() + " is not prime");
  int balance = 0;
  int nonresidues = 0;
  for (const auto& e : entries) {
    const int l = legendre(e, p);
    if (l == 0) throw std::domain_error("zero entry in a form over F_" + p.get_str());
    balance += l;
    if (l < 0) ++nonresidues;
  }
  if (WittClassFp::kind_of(p) == WittClassFp::Kind::three_mod_four) return WittClassFp(p, balance);
  return WittClassFp(p, static_cast<int>(entries.size()), nonresidues % 2 == 1);
}

WittClassFp fp_class_of(const BilinearForm& f) {
  if (f.over_rationals()) throw std::invalid_argument("fp_class_of: form is over Q");
  if (f.symmetry() != Symmetry::symmetric) return WittClassFp(Integer(static_cast<long>(f.prime())));
  std::vector<Integer> entries;
  for (const auto& e : nondegenerate_entries(f)) entries.push_back(e.get_num());
  return fp_class_of(entries, Integer(static_cast<long>(f.prime())));
}

WittClassQ operator+(const WittClassQ& a, const WittClassQ& b) {
  WittClassQ out;
  out.signature = a.signature + b.signature;
  out.residues = a.residues;
  for (const auto& [p, c] : b.residues) {
    auto it = out.residues.find(p);
    if (it == out.residues.end()) {
      out.residues.emplace(p, c);
      continue;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) out.residues.erase(it);
  }
  return out;
}

WittClassQ operator-(const WittClassQ& a) {
  WittClassQ out;
  out.signature = -a.signature;
  for (const auto& [p, c] : a.residues) out.residues.emplace(p, -c);
  return out;
}

WittClassFp psi(const std::vector<Rational>& entries, const Integer& p, int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("psi: k must be 0 or 1");
  std::vector<Integer> kept;
  for (const auto& a : entries) {
    const LocalUnitData local = p_adic_split(a, p);
    if (mod(static_cast<int>(local.valuation % 2), 2) == k) kept.push_back(local.unit_residue);
  }
  if (p == 2) return WittClassFp(p, static_cast<int>(kept.size()));
  return fp_class_of(kept, p);
}

WittClassFp psi(const BilinearForm& f, const Integer& p, int k) {
  require_rational_symmetric(f, "psi");
  if (f.symmetry() != Symmetry::symmetric) throw std::invalid_argument("psi requires a symmetric form");
  return psi(nondegenerate_entries(f), p, k);
}

WittClassQ witt_class_of_diagonal(const std::vector<Rational>& entries) {
  WittClassQ out;
  std::set<Integer> primes;
  for (const auto& a : entries) {
    if (sgn(a) == 0) throw std::domain_error("zero diagonal entry; split off radical first");
    out.signature += sgn(a);
    for (const auto& p : prime_support(a)) primes.insert(p);
  }
  for (const auto& p : primes) {
    WittClassFp r = psi(entries, p, 1);
    if (!r.is_zero()) out.residues.emplace(p, r);
  }
  return out;
}

WittClassQ witt_class_of(const BilinearForm& f) {
  require_rational_symmetric(f, "witt_class_of");
  if (f.symmetry() == Symmetry::skew) {
    symplectic_reduce(radical_split(f).nondegenerate);
    return {};
  }
  const BilinearForm nd = radical_split(f).nondegenerate;
  const std::vector<Rational> entries = diagonalize(nd).entries;
  WittClassQ out;
  for (const auto& a : entries) out.signature += sgn(a);
  for (const auto& p : local_primes(nd)) {
    WittClassFp r = psi(entries, p, 1);
    if (!r.is_zero()) out.residues.emplace(p, r);
  }
  return out;
}

bool witt_equal_by_hasse(const BilinearForm& f, const BilinearForm& g) {
  require_rational_symmetric(f, "witt_equal_by_hasse");
  require_rational_symmetric(g, "witt_equal_by_hasse");
  if (f.symmetry() != g.symmetry()) throw std::invalid_argument("comparing forms of different symmetry");
  if (f.symmetry() == Symmetry::skew) return true;
  const BilinearForm h =
      direct_sum(radical_split(f).nondegenerate, radical_split(g).nondegenerate.negated());
  const std::vector<Rational> a = diagonalize(h).entries;
  if (a.size() % 2 != 0) return false;
  const std::size_t m = a.size() / 2;
  std::vector<Rational> reference;
  for (std::size_t i = 0; i < m; ++i) {
    reference.emplace_back(1);
    reference.emplace_back(-1);
  }
  std::size_t positive = 0;
  for (const auto& x : a)
    if (sgn(x) > 0) ++positive;
  if (positive != m) return false;
  if (!(square_class(determinant(h.gram())) == square_class(Rational(m % 2 ? -1 : 1)))) return false;
  for (const auto& place : local_places(h))
    if (hasse_invariant(a, place) != hasse_invariant(reference, place)) return false;
  return true;
}

bool equivalent(const BilinearForm& f, const BilinearForm& g) {
  const bool by_residues = witt_class_of(f) == witt_class_of(g);
  const bool by_hasse = witt_equal_by_hasse(f, g);
  if (by_residues != by_hasse)
    throw std::logic_error("residue and Hasse equality decisions disagree");
  return by_residues;
}

}  // namespace wittcob
