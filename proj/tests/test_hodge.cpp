#include "wittcob/hodge.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wittcob;

namespace {

GMatrix gcol(std::initializer_list<Gaussian> entries) {
  GMatrix v(entries.size(), 1);
  std::size_t r = 0;
  for (const auto& x : entries) v(r++, 0) = x;
  return v;
}

const Gaussian I{Rational(0), Rational(1)};
const Gaussian minus_I{Rational(0), Rational(-1)};

HodgeStructure pure_weight_zero(std::size_t n) {
  return {0, {{0, 0, to_gaussian(QMatrix::identity(n))}}};
}

// H^{1,0} = span(1, i), H^{0,1} its conjugate.
HodgeStructure elliptic() { return {1, {{1, 0, gcol({1, I})}, {0, 1, gcol({1, minus_I})}}}; }

// e1 + i e2 of type (2,0), its conjugate (0,2), and e3 of type (1,1).
HodgeStructure weight_two() {
  return {2, {{2, 0, gcol({1, I, 0})}, {1, 1, gcol({0, 0, 1})}, {0, 2, gcol({1, minus_I, 0})}}};
}

BilinearForm sym(const QMatrix& m) { return BilinearForm(m, Symmetry::symmetric); }

}  // namespace

TEST(HodgeStructure, ValidatesBigrading) {
  EXPECT_TRUE(elliptic().violations().empty());
  EXPECT_TRUE(weight_two().violations().empty());
  HodgeStructure bad_weight = elliptic();
  bad_weight.pieces[0].p = 2;
  EXPECT_FALSE(bad_weight.violations().empty());
  HodgeStructure not_conjugate = elliptic();
  not_conjugate.pieces[1].basis = gcol({1, 2});
  EXPECT_FALSE(not_conjugate.violations().empty());
  HodgeStructure dependent = {0, {{0, 0, gcol({1, 0})}, {0, 0, gcol({2, 0})}}};
  EXPECT_FALSE(dependent.violations().empty());
}

TEST(WeilOperator, Examples) {
  EXPECT_EQ(weil_operator(pure_weight_zero(3)), QMatrix::identity(3));
  EXPECT_EQ(weil_operator(elliptic()), (QMatrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(weil_operator(weight_two()), QMatrix::diagonal({Rational(-1), Rational(-1), Rational(1)}));
  HodgeStructure invalid = elliptic();
  invalid.pieces.pop_back();
  EXPECT_THROW(weil_operator(invalid), std::invalid_argument);
}

TEST(IsPolarization, Examples) {
  EXPECT_TRUE(is_polarization(pure_weight_zero(1), sym(QMatrix::identity(1))).ok);

  const BilinearForm good(QMatrix{{0, -1}, {1, 0}}, Symmetry::skew);
  const auto r = is_polarization(elliptic(), good);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.S_C, QMatrix::identity(2));

  const BilinearForm flipped(QMatrix{{0, 1}, {-1, 0}}, Symmetry::skew);
  const auto r2 = is_polarization(elliptic(), flipped);
  EXPECT_FALSE(r2.ok);
  EXPECT_EQ(r2.S_C, Rational(-1) * QMatrix::identity(2));

  EXPECT_FALSE(is_polarization(pure_weight_zero(2), BilinearForm::diagonal({Rational(1), Rational(-1)})).ok);
  // Wrong symmetry for the weight.
  EXPECT_FALSE(is_polarization(elliptic(), BilinearForm::diagonal({Rational(1), Rational(1)})).ok);
}

TEST(IsPolarization, FirstBilinearRelationIsEnforced) {
  const BilinearForm s = BilinearForm::diagonal({Rational(-1), Rational(-1), Rational(1)});
  EXPECT_TRUE(is_polarization(weight_two(), s).ok);
  // Positive S_C is not enough: diag(-1, -2, 1) pairs H^{2,0} with itself.
  const BilinearForm skewed = BilinearForm::diagonal({Rational(-1), Rational(-2), Rational(1)});
  const auto r = is_polarization(weight_two(), skewed);
  EXPECT_FALSE(r.ok);
}

TEST(ComparePolarizations, RationalFailureWitness) {
  const auto h = pure_weight_zero(1);
  const BilinearForm one = BilinearForm::diagonal({Rational(1)}), three = BilinearForm::diagonal({Rational(3)});
  const auto c = compare_polarizations(h, one, three);
  EXPECT_EQ(c.phi, QMatrix{{Rational(3)}});
  ASSERT_TRUE(c.eigenspaces.has_value());
  ASSERT_EQ(c.eigenspaces->size(), 1u);
  EXPECT_EQ(c.eigenspaces->front().eigenvalue, Rational(3));
  EXPECT_TRUE(c.holds());
  EXPECT_TRUE(c.signatures_equal());
  EXPECT_NE(witt_class_of(one), witt_class_of(three));
  EXPECT_FALSE(witt_class_of(three).residues.empty());
}

TEST(ComparePolarizations, ScaledPolarization) {
  const BilinearForm s = BilinearForm::diagonal({Rational(-1), Rational(-1), Rational(1)});
  const auto c = compare_polarizations(weight_two(), s, s.scaled(Rational(2)));
  EXPECT_EQ(c.phi, Rational(2) * QMatrix::identity(3));
  EXPECT_TRUE(c.holds());
  EXPECT_FALSE(c.characteristic_squarefree);
  EXPECT_TRUE(c.minimal_annihilates);
}

TEST(ComparePolarizations, IrreducibleQuadraticSpectrum) {
  const auto c = compare_polarizations(pure_weight_zero(2), sym(QMatrix::identity(2)), sym(QMatrix{{2, 1}, {1, 3}}));
  EXPECT_EQ(c.phi, (QMatrix{{2, 1}, {1, 3}}));
  EXPECT_EQ(c.characteristic, Polynomial(std::vector<Rational>{Rational(5), Rational(-5), Rational(1)}));
  EXPECT_EQ(c.sturm.positive_roots, 2);
  EXPECT_TRUE(c.sturm.all_real);
  EXPECT_TRUE(c.characteristic_squarefree);
  EXPECT_FALSE(c.eigenspaces.has_value());
  EXPECT_TRUE(c.holds());
}

TEST(ComparePolarizations, RejectsNonPolarizations) {
  EXPECT_THROW(compare_polarizations(pure_weight_zero(1), BilinearForm::diagonal({Rational(1)}),
                                     BilinearForm::diagonal({Rational(-1)})),
               std::invalid_argument);
}

TEST(PolClass, Examples) {
  const auto a = pol_class(pure_weight_zero(1), BilinearForm::diagonal({Rational(1)}));
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(a.witt, witt_class_of(BilinearForm::diagonal({Rational(1)})));

  const BilinearForm s = BilinearForm::diagonal({Rational(-1), Rational(-1), Rational(1)});
  const auto b = pol_class(weight_two(), s);
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.witt, witt_class_of(s.negated()));
  EXPECT_EQ(b.witt.signature, 1);

  const auto c = pol_class(elliptic(), BilinearForm(QMatrix{{0, -1}, {1, 0}}, Symmetry::skew));
  EXPECT_TRUE(c.skew);
  EXPECT_TRUE(c.witt.is_zero());
  EXPECT_TRUE(c.symplectic_certificate.has_value());
}

TEST(RandomFixtures, PropositionHoldsOnEveryFixture) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 120; ++t) {
    const int w = t % 4;
    const HodgeFixture fx = random_hodge_fixture(rng, w);
    ASSERT_TRUE(fx.h.violations().empty());
    const QMatrix C = weil_operator(fx.h);
    EXPECT_EQ(C * C, Rational(w % 2 ? -1 : 1) * QMatrix::identity(fx.h.dim()));
    const auto rs = is_polarization(fx.h, fx.S);
    ASSERT_TRUE(rs.ok) << rs.failures.front();
    // S(u, Cv) = (-1)^w S(Cu, v) = S(v, Cu).
    EXPECT_EQ(fx.S.gram() * C, Rational(w % 2 ? -1 : 1) * C.transpose() * fx.S.gram());
    EXPECT_EQ(rs.S_C, rs.S_C.transpose());
    ASSERT_TRUE(is_polarization(fx.h, fx.S_prime).ok);

    const auto c = compare_polarizations(fx.h, fx.S, fx.S_prime);
    EXPECT_EQ(c.phi, fx.psi);
    EXPECT_TRUE(c.holds());
    EXPECT_TRUE(c.minimal_annihilates);
    EXPECT_TRUE(c.spectrum_positive_real);
    EXPECT_TRUE(c.identity_chain);
    EXPECT_TRUE(c.preserves_bigrading);
    EXPECT_EQ(c.sturm.positive_roots, static_cast<int>(c.minimal.degree()));
    EXPECT_EQ(c.signature_S, c.signature_S_prime);
    if (c.eigenspaces) {
      std::size_t total = 0;
      for (const auto& e : *c.eigenspaces) {
        EXPECT_GT(sgn(e.eigenvalue), 0);
        EXPECT_EQ(c.phi * e.basis, e.eigenvalue * e.basis);
        total += e.basis.cols();
      }
      EXPECT_EQ(total, fx.h.dim());
      EXPECT_TRUE(c.eigenspaces_orthogonal);
    }
    EXPECT_EQ(pol_class(fx.h, fx.S).witt.signature, pol_class(fx.h, fx.S_prime).witt.signature);
  }
}
