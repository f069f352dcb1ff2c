#include "wittcob/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace wittcob {

namespace {

std::atomic<std::uint64_t> g_trial_bound{10'000'000};

// Square test that does not need factoring.
bool is_perfect_square(const Integer& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

void push_factor(std::vector<std::pair<Integer, unsigned>>& out, const Integer& p, unsigned e) {
  for (auto& [q, k] : out) {
    if (q == p) {
      k += e;
      return;
    }
  }
  out.emplace_back(p, e);
}

}  // namespace

void set_trial_division_bound(std::uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("trial division bound must be at least 2");
  g_trial_bound.store(bound);
}

std::uint64_t trial_division_bound() { return g_trial_bound.load(); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n == 0) throw std::domain_error("cannot factor zero");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  const std::uint64_t bound = trial_division_bound();
  auto strip = [&](std::uint64_t d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    if (e) out.emplace_back(Integer(static_cast<unsigned long>(d)), e);
  };
  strip(2);
  for (std::uint64_t d = 3; d <= bound; d += 2) {
    if (m == 1) break;
    if (mpz_cmp_ui(m.get_mpz_t(), d * d) < 0) break;
    strip(d);
  }
  if (m == 1) return out;
  if (is_prime(m)) {
    push_factor(out, m, 1);
  } else if (is_perfect_square(m)) {
    const Integer r = sqrt(m);
    if (!is_prime(r)) {
      throw std::domain_error("cannot factor " + n.get_str() + " within trial division bound " +
                              std::to_string(bound));
    }
    push_factor(out, r, 2);
  } else {
    throw std::domain_error("cannot factor " + n.get_str() + " within trial division bound " +
                            std::to_string(bound));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SquareClass::SquareClass(Integer squarefree_rep) : rep_(std::move(squarefree_rep)) {
  if (rep_ == 0) throw std::domain_error("zero has no square class");
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  return square_class(Rational(a.rep_ * b.rep_));
}

SquareClass square_class(const Rational& a) {
  if (sgn(a) == 0) throw std::domain_error("zero has no square class");
  // n/d ~ n*d modulo squares.
  const Integer product = a.get_num() * a.get_den();
  Integer rep = sgn(product);
  for (const auto& [p, e] : factorize(product)) {
    if (e % 2 == 1) rep *= p;
  }
  return SquareClass(rep);
}

long valuation(const Rational& a, const Integer& p) {
  if (sgn(a) == 0) throw std::domain_error("valuation of zero");
  long v = 0;
  Integer num = a.get_num(), den = a.get_den();
  while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
    num /= p;
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
    den /= p;
    --v;
  }
  return v;
}

LocalUnitData p_adic_split(const Rational& a, const Integer& p) {
  if (sgn(a) == 0) throw std::domain_error("zero has no p-adic unit part");
  if (!is_prime(p)) throw std::invalid_argument("p_adic_split: " + p.get_str() + " is not prime");
  LocalUnitData out;
  out.prime = p;
  out.valuation = valuation(a, p);
  Integer num = a.get_num(), den = a.get_den();
  while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) num /= p;
  while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) den /= p;
  out.unit = Rational(num, den);
  out.unit.canonicalize();
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer residue = num * den_inv;
  mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), p.get_mpz_t());
  out.unit_residue = residue;
  return out;
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("place: " + p.get_str() + " is not prime");
  return Place(p);
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (sgn(a) == 0 || sgn(b) == 0) throw std::domain_error("hilbert symbol of zero");
  if (place.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  // Integers in the same square classes.
  const Integer x = a.get_num() * a.get_den();
  const Integer y = b.get_num() * b.get_den();
  const Integer& p = place.prime_number();
  long alpha = 0, beta = 0;
  Integer u = x, v = y;
  while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) { u /= p; ++alpha; }
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) { v /= p; ++beta; }
  if (p == 2) {
    auto mod8 = [](const Integer& z) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), 8);
      return r.get_si();
    };
    const long u8 = mod8(u), v8 = mod8(v);
    const long eps_u = ((u8 - 1) / 2) % 2;           // (u-1)/2 mod 2
    const long eps_v = ((v8 - 1) / 2) % 2;
    const long om_u = ((u8 * u8 - 1) / 8) % 2;       // (u^2-1)/8 mod 2
    const long om_v = ((v8 * v8 - 1) / 8) % 2;
    const long e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return e % 2 == 0 ? 1 : -1;
  }
  Integer pm;
  mpz_fdiv_r_ui(pm.get_mpz_t(), p.get_mpz_t(), 4);
  const long eps_p = pm == 3 ? 1 : 0;  // (p-1)/2 mod 2
  int result = ((alpha * beta * eps_p) % 2 == 0) ? 1 : -1;
  if (beta % 2 == 1) result *= legendre(u, p);
  if (alpha % 2 == 1) result *= legendre(v, p);
  return result;
}

std::vector<Integer> prime_support(const Rational& a) {
  std::vector<Integer> primes;
  for (const auto& [p, e] : factorize(a.get_num() * a.get_den())) primes.push_back(p);
  return primes;
}

}  // namespace wittcob
