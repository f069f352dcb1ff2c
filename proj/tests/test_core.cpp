#include "oracles.hpp"
#include "wittcob/numtheory.hpp"
#include "wittcob/polynomial.hpp"
#include "wittcob/rational.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace wittcob;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p(std::vector<Rational>{Rational(1)});
  for (const auto& r : roots) p = p * Polynomial(std::vector<Rational>{-r, Rational(1)});
  return p;
}

}  // namespace

TEST(Rational, ParsesAndNormalizes) {
  EXPECT_EQ(q("6/-4"), Rational(-3, 2));
  EXPECT_EQ(q(" 7 "), Rational(7));
  EXPECT_EQ(to_string(q("10/4")), "5/2");
  EXPECT_THROW(q("1/0"), std::invalid_argument);
  EXPECT_THROW(q("abc"), std::invalid_argument);
}

TEST(SquareClass, Examples) {
  EXPECT_EQ(square_class(q("1/2")).rep(), 2);
  EXPECT_EQ(square_class(Rational(-2)).rep(), -2);
  EXPECT_EQ(square_class(Rational(18)).rep(), 2);
  EXPECT_THROW(square_class(Rational(0)), std::domain_error);
}

TEST(SquareClass, InvariantUnderSquares) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-200, 200);
  for (int t = 0; t < 300; ++t) {
    long a = 0, c = 0;
    while (a == 0) a = d(rng);
    while (c == 0) c = d(rng);
    Rational x(a, std::abs(d(rng)) + 1);
    x.canonicalize();
    EXPECT_EQ(square_class(x * c * c), square_class(x));
    EXPECT_EQ(square_class(x).rep(), oracle::squarefree_part(x));
  }
}

TEST(PAdicSplit, Examples) {
  const auto a = p_adic_split(Rational(-2), 2);
  EXPECT_EQ(a.valuation, 1);
  EXPECT_EQ(a.unit, Rational(-1));
  EXPECT_EQ(a.unit_residue, 1);

  const auto b = p_adic_split(Rational(-2), 3);
  EXPECT_EQ(b.valuation, 0);
  EXPECT_EQ(b.unit_residue, 1);

  const auto c = p_adic_split(q("9/4"), 3);
  EXPECT_EQ(c.valuation, 2);
  EXPECT_EQ(c.unit, q("1/4"));
  EXPECT_EQ(c.unit_residue, 1);

  EXPECT_THROW(p_adic_split(Rational(5), 9), std::invalid_argument);
  EXPECT_THROW(p_adic_split(Rational(0), 3), std::domain_error);
}

TEST(PAdicSplit, ReassemblesSquareClassAtP) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(1, 500);
  for (const long p : {2L, 3L, 5L, 7L, 13L}) {
    for (int t = 0; t < 100; ++t) {
      Rational a(d(rng) * (t % 2 ? -1 : 1), d(rng));
      a.canonicalize();
      const auto s = p_adic_split(a, p);
      Rational back = s.unit;
      for (long i = 0; i < std::labs(s.valuation); ++i) back = s.valuation > 0 ? Rational(back * p) : Rational(back / p);
      EXPECT_EQ(back, a);
      EXPECT_EQ(valuation(s.unit, p), 0);
      Integer r = s.unit.get_num() - s.unit_residue * s.unit.get_den();
      EXPECT_TRUE(mpz_divisible_ui_p(r.get_mpz_t(), p));
    }
  }
}

TEST(HilbertSymbol, Examples) {
  EXPECT_EQ(hilbert_symbol(Rational(1), Rational(-7), Place::prime(7)), 1);
  EXPECT_EQ(hilbert_symbol(Rational(1), Rational(-7), Place::real()), 1);
  EXPECT_EQ(hilbert_symbol(Rational(2), Rational(2), Place::prime(2)), 1);
  EXPECT_EQ(hilbert_symbol(Rational(3), Rational(3), Place::prime(3)), -1);
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Place::real()), -1);
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Place::prime(2)), -1);
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(3), Place::prime(2)), -1);
}

TEST(HilbertSymbol, MatchesBruteForceSolubility) {
  std::vector<long> values;
  for (long a = -15; a <= 15; ++a)
    if (a != 0 && oracle::squarefree_part(Rational(a)) == a) values.push_back(a);
  for (const long p : {2L, 3L, 5L, 7L}) {
    for (const long a : values)
      for (const long b : values)
        ASSERT_EQ(hilbert_symbol(Rational(a), Rational(b), Place::prime(p)),
                  oracle::hilbert_symbol_brute(Rational(a), Rational(b), p))
            << "(" << a << ", " << b << ")_" << p;
  }
  for (const long p : {11L, 13L})
    for (const long a : {-13L, -11L, -2L, -1L, 2L, 3L, 11L, 13L})
      for (const long b : {-13L, -11L, -3L, -1L, 5L, 7L, 11L, 13L})
        ASSERT_EQ(hilbert_symbol(Rational(a), Rational(b), Place::prime(p)),
                  oracle::hilbert_symbol_brute(Rational(a), Rational(b), p))
            << "(" << a << ", " << b << ")_" << p;
}

TEST(HilbertSymbol, RationalArgumentsReduceToSquareClasses) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(1, 40);
  for (int t = 0; t < 200; ++t) {
    Rational a(d(rng) * (t % 3 ? 1 : -1), d(rng)), b(d(rng) * (t % 2 ? 1 : -1), d(rng));
    a.canonicalize();
    b.canonicalize();
    for (const long p : {2L, 3L, 5L})
      EXPECT_EQ(hilbert_symbol(a, b, Place::prime(p)), oracle::hilbert_symbol_brute(a, b, p));
  }
}

TEST(HilbertSymbol, SymmetricBimultiplicativeAndProductFormula) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-90, 90);
  auto draw = [&] {
    long v = 0;
    while (v == 0) v = d(rng);
    return Rational(v);
  };
  for (int t = 0; t < 200; ++t) {
    const Rational a = draw(), b = draw(), c = draw();
    std::set<Integer> primes{Integer(2)};
    for (const auto& x : {a, b, c})
      for (const auto& p : prime_support(x)) primes.insert(p);
    int product = hilbert_symbol(a, b, Place::real());
    for (const auto& p : primes) product *= hilbert_symbol(a, b, Place::prime(p));
    EXPECT_EQ(product, 1);
    for (const auto& p : primes) {
      const Place v = Place::prime(p);
      EXPECT_EQ(hilbert_symbol(a, b, v), hilbert_symbol(b, a, v));
      EXPECT_EQ(hilbert_symbol(a, b * c, v), hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
      EXPECT_EQ(hilbert_symbol(a, -a, v), 1);
    }
  }
}

TEST(Factorize, RespectsTrialDivisionBound) {
  const auto f = factorize(Integer(360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], std::make_pair(Integer(2), 3u));
  const std::uint64_t saved = trial_division_bound();
  set_trial_division_bound(10);
  // 101 * 103 is composite and has no factor below the bound.
  EXPECT_THROW(factorize(Integer(101 * 103)), std::domain_error);
  EXPECT_NO_THROW(factorize(Integer(101)));
  set_trial_division_bound(saved);
  EXPECT_NO_THROW(factorize(Integer(101 * 103)));
}

TEST(Sturm, Examples) {
  const auto linear = sturm_positive_real_roots(Polynomial(std::vector<Rational>{Rational(-3), Rational(1)}));
  EXPECT_EQ(linear.positive_roots, 1);
  EXPECT_TRUE(linear.all_real);
  EXPECT_TRUE(linear.squarefree);

  const auto quad = sturm_positive_real_roots(Polynomial(std::vector<Rational>{Rational(5), Rational(-5), Rational(1)}));
  EXPECT_EQ(quad.positive_roots, 2);
  EXPECT_TRUE(quad.all_real);
  EXPECT_TRUE(quad.squarefree);
  // Roots (5 +- sqrt 5)/2 are 2.236 apart and lie in (1, 4).
  EXPECT_EQ(oracle::real_roots_by_grid({Rational(5), Rational(-5), Rational(1)}, Rational(0), Rational(10), Rational(2)), 2);

  const auto imag = sturm_positive_real_roots(Polynomial(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}));
  EXPECT_EQ(imag.positive_roots, 0);
  EXPECT_FALSE(imag.all_real);
  EXPECT_TRUE(imag.squarefree);

  EXPECT_THROW(sturm_positive_real_roots(Polynomial()), std::invalid_argument);
}

TEST(Sturm, AgreesWithConstructedSpectra) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-6, 6), n(0, 2);
  for (int t = 0; t < 150; ++t) {
    // Distinct integer roots, optionally times an irreducible x^2 + c (c > 0).
    std::set<long> roots;
    const std::size_t k = 1 + t % 5;
    while (roots.size() < k) roots.insert(d(rng));
    std::vector<Rational> rs(roots.begin(), roots.end());
    Polynomial p = from_roots(rs);
    const long extra = n(rng);
    if (extra) p = p * Polynomial(std::vector<Rational>{Rational(extra), Rational(0), Rational(1)});
    long positive = 0;
    for (long r : roots) positive += r > 0;
    const auto s = sturm_positive_real_roots(p);
    EXPECT_EQ(s.positive_roots, positive);
    EXPECT_EQ(s.real_roots, static_cast<int>(roots.size()));
    EXPECT_EQ(s.all_real, extra == 0);
    EXPECT_TRUE(s.squarefree);
    EXPECT_EQ(s.positive_roots, oracle::real_roots_by_grid(p.coefficients(), Rational(0), Rational(7), Rational(1)));

    // A repeated root breaks squarefreeness but not the distinct-root count.
    const auto doubled = sturm_positive_real_roots(p * from_roots({rs.front()}));
    EXPECT_FALSE(doubled.squarefree);
    EXPECT_EQ(doubled.positive_roots, positive);
  }
}

TEST(Polynomial, CharacteristicPolynomialAndSquarefreePart) {
  const QMatrix m{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  EXPECT_EQ(characteristic_polynomial(m), Polynomial(std::vector<Rational>{Rational(5), Rational(-5), Rational(1)}));
  const Polynomial p = from_roots({Rational(2), Rational(2), Rational(3)});
  EXPECT_EQ(squarefree_part(p), from_roots({Rational(2), Rational(3)}));
  EXPECT_EQ(rational_roots(p), (std::vector<Rational>{Rational(2), Rational(3)}));
}
