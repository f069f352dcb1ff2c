#include "wittcob/genus.hpp"

#include <gtest/gtest.h>

#include <random>
#include <utility>

using namespace wittcob;

namespace {

int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

// (-1)^{m(m+1)/2} straight from the definition; m(m+1)/2 is exact for |m| <= 10^6.
int epsilon_reference(long m) { return sign_power(m * (m + 1) / 2); }

HodgeDiamond random_diamond(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(0, 6);
  HodgeDiamond out{n, std::vector<std::vector<long>>(n + 1, std::vector<long>(n + 1, 0))};
  for (int p = 0; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      if (std::make_pair(p, q) > std::make_pair(n - q, n - p)) continue;  // visit each orbit once
      const long v = (p == 0 && q == 0) ? 1 + d(rng) : d(rng);
      // Fill the orbit {(p,q), (q,p), (n-p,n-q), (n-q,n-p)}.
      out.h[p][q] = out.h[q][p] = out.h[n - p][n - q] = out.h[n - q][n - p] = v;
    }
  return out;
}

}  // namespace

TEST(ChiY, GoldenValues) {
  EXPECT_EQ(chi_y(point_diamond()), (YPolynomial{{1}}));
  EXPECT_EQ(chi_y(projective_plane_diamond()), (YPolynomial{{1, -1, 1}}));
  EXPECT_EQ(chi_y(k3_diamond()), (YPolynomial{{2, -20, 2}}));
  EXPECT_EQ(chi_y(k3_diamond()).to_string(), "2 - 20y + 2y^2");
}

TEST(ChiY, Specializations) {
  const auto p2 = specialize(chi_y(projective_plane_diamond()), 2);
  EXPECT_EQ(p2.euler, 3);
  EXPECT_EQ(p2.arithmetic_genus, 1);
  EXPECT_EQ(p2.signature, 1);
  EXPECT_TRUE(p2.even_dimension);

  const auto k3 = specialize(chi_y(k3_diamond()), 2);
  EXPECT_EQ(k3.euler, 24);
  EXPECT_EQ(k3.arithmetic_genus, 2);
  EXPECT_EQ(k3.signature, -16);

  const auto pt = specialize(chi_y(point_diamond()), 0);
  EXPECT_EQ(pt.euler, 1);
  EXPECT_EQ(pt.arithmetic_genus, 1);
  EXPECT_EQ(pt.signature, 1);
}

TEST(ChiY, RejectsInvalidDiamonds) {
  HodgeDiamond asym = k3_diamond();
  asym.h[2][0] = 3;
  EXPECT_FALSE(asym.violations().empty());
  EXPECT_THROW(chi_y(asym), std::invalid_argument);
  HodgeDiamond empty_top = point_diamond();
  empty_top.h[0][0] = 0;
  EXPECT_THROW(chi_y(empty_top), std::invalid_argument);
}

TEST(ChiY, EulerAndSerreSymmetryOnRandomDiamonds) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 300; ++t) {
    const int n = t % 6;
    const HodgeDiamond d = random_diamond(rng, n);
    ASSERT_TRUE(d.violations().empty());
    const YPolynomial chi = chi_y(d);
    long euler = 0;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) euler += sign_power(p + q) * d.h[p][q];
    EXPECT_EQ(chi(-1), euler);
    EXPECT_EQ(specialize(chi, n).euler, euler);
    std::vector<long> c(n + 1, 0);
    for (std::size_t k = 0; k < chi.c.size(); ++k) c[k] = chi.c[k];
    for (int p = 0; p <= n; ++p) EXPECT_EQ(c[n - p], sign_power(n) * c[p]) << "n=" << n << " p=" << p;
  }
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon(0), 1);
  EXPECT_EQ(epsilon(1), -1);
  EXPECT_EQ(epsilon(2), -1);
  EXPECT_EQ(epsilon(3), 1);
  EXPECT_EQ(epsilon(4), 1);
}

TEST(Epsilon, DefinitionPairRuleAndRecurrence) {
  for (long m = -1000; m <= 1000; ++m) {
    EXPECT_EQ(epsilon(m), epsilon_reference(m)) << m;
    EXPECT_TRUE(epsilon_pair_rule(m)) << m;
    EXPECT_EQ(epsilon(m), epsilon(m - 1) * sign_power(m)) << m;
  }
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int t = 0; t < 500; ++t) {
    const long w = d(rng), k = d(rng);
    EXPECT_EQ(epsilon(w - 2 * k), epsilon(w) * sign_power(k));
  }
}

TEST(Lefschetz, SinglePieces) {
  for (int w = -3; w <= 6; ++w) {
    const auto zero = lefschetz_cancellation_check({{0, 5}}, w);
    EXPECT_TRUE(zero.equal);
    EXPECT_EQ(zero.lhs.at(0), epsilon(w));
    EXPECT_EQ(zero.rhs.at(0), epsilon(w));
    EXPECT_EQ(zero.lhs_value, 5 * epsilon(w));
    EXPECT_EQ(zero.rhs_value, zero.lhs_value);

    const auto one = lefschetz_cancellation_check({{1, 7}}, w);
    EXPECT_TRUE(one.equal);
    EXPECT_EQ(one.lhs.at(1), 0);
    EXPECT_EQ(one.lhs_value, 0);
    EXPECT_EQ(one.rhs_value, 0);
    EXPECT_TRUE(one.odd_pieces_vanish);
  }
}

TEST(Lefschetz, MatchesDirectDoubleSum) {
  std::mt19937_64 rng(63);
  std::uniform_int_distribution<int> wd(-6, 6), present(0, 1);
  std::uniform_int_distribution<long> sd(-9, 9);
  for (int t = 0; t < 500; ++t) {
    const int w = wd(rng);
    std::vector<PrimitivePiece> pieces;
    for (int j = 0; j <= 5; ++j)
      if (present(rng) && (t % 5 != 0 || j % 2 == 1)) pieces.push_back({j, sd(rng)});
    long lhs = 0, rhs = 0;
    for (const auto& piece : pieces) {
      long inner = 0;
      for (int k = 0; k <= piece.j; ++k) inner += epsilon_reference(w - piece.j + 2 * k);
      lhs += sign_power(piece.j) * inner * piece.signature;
      if (piece.j % 2 == 0) rhs += epsilon_reference(w) * sign_power(piece.j / 2) * piece.signature;
    }
    const auto r = lefschetz_cancellation_check(pieces, w);
    EXPECT_TRUE(r.equal);
    EXPECT_TRUE(r.odd_pieces_vanish);
    EXPECT_EQ(r.lhs_value, lhs);
    EXPECT_EQ(r.rhs_value, rhs);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Lefschetz, RejectsDuplicateOrNegativeOffsets) {
  EXPECT_THROW(lefschetz_cancellation_check({{2, 1}, {2, 3}}, 0), std::invalid_argument);
  EXPECT_THROW(lefschetz_cancellation_check({{-1, 1}}, 0), std::invalid_argument);
}

TEST(SignDictionary, ExamplesAndExhaustiveRange) {
  const auto a = sign_dictionary_check(3, 1);
  EXPECT_EQ(a.lhs, 5);
  EXPECT_EQ(a.rhs, 5);
  EXPECT_TRUE(a.holds());
  for (long d = 0; d <= 50; ++d) {
    EXPECT_TRUE(sign_dictionary_check(d, d).holds());
    for (long dp = 0; dp <= d; ++dp) EXPECT_TRUE(sign_dictionary_check(d, dp).holds()) << d << " " << dp;
  }
}

TEST(IsolatedPoint, SurfacesOfDegreeTwoToFour) {
  // sig(H^2) = 2 + 2 h20 - h11; the residual 1 - sig survives.
  const struct {
    SurfaceHodgeData s;
    long signature;
    long residual;
  } cases[] = {{{2, 2, 0}, 0, 1}, {{3, 7, 0}, -5, 6}, {{4, 20, 1}, -16, 17}};
  for (const auto& c : cases) {
    const auto r = isolated_point_example(c.s);
    EXPECT_EQ(r.signature_H2, c.signature) << c.s.degree;
    EXPECT_EQ(r.primitive_signature, c.signature - 1);
    EXPECT_EQ(r.primitive_dimension, c.s.h11 - 1 + 2 * c.s.h20);
    EXPECT_EQ(r.residual, c.residual);
    EXPECT_TRUE(r.obstruction);
  }
}

TEST(DoublePoint, NonvanishingCertificates) {
  const auto r = double_point_example();
  EXPECT_TRUE(r.verdict());
  EXPECT_FALSE(r.psi1_at_2.is_zero());
  EXPECT_EQ(r.psi0_at_3.value(), 2);
  EXPECT_EQ(r.psi0_at_3_order, 2);
  EXPECT_EQ(r.sum.signature, 0);
}
