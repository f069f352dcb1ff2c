// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"
#include "wittcob/cobordism.hpp"
#include "wittcob/genus.hpp"
#include "wittcob/hodge.hpp"
#include "wittcob/suites.hpp"
#include "wittcob/witt.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace wittcob;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int sign_power(long e) { return e % 2 == 0 ? 1 : -1; }

std::vector<long> primes_below(long n) {
  std::vector<long> out;
  for (long p = 2; p < n; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

void double_point(Verdict& v) {
  const DoublePointReport r = double_point_example();
  const WittClassQ sum = witt_class_of(BilinearForm::diagonal({Rational(-2), Rational(1)}));
  v.require(!sum.is_zero(), "<-2> + <1> is zero in W(Q)");
  v.require(sum == r.sum, "report sum differs from direct computation");
  const WittClassFp at2 = psi({Rational(-2), Rational(1)}, Integer(2), 1);
  v.require(!at2.is_zero() && at2 == unit_class(Integer(2)), "psi^1 at 2 is not [<1>] in W(F_2)");
  const WittClassFp at3 = psi({Rational(-2), Rational(1)}, Integer(3), 0);
  v.require(at3 == unit_class(Integer(3)) + unit_class(Integer(3)), "psi^0 at 3 is not 2[<1>]");
  v.require(at3.order() == 2 && r.psi0_at_3_order == 2, "psi^0 at 3 does not have order 2");
  v.require(r.verdict(), "double point report verdict is false");
  v.detail << "psi1@2=" << at2.to_string() << " psi0@3=" << at3.to_string();
}

// Closure of {<1>, <g>} under addition, with the library's group law.
std::vector<WittClassFp> library_closure(long p, long g) {
  const Integer P(p);
  std::vector<WittClassFp> gens{unit_class(P)};
  if (p != 2) gens.push_back(fp_class_of({Integer(g)}, P));
  std::vector<WittClassFp> seen{WittClassFp(P)};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& s : gens) {
      const WittClassFp x = seen[i] + s;
      if (std::find(seen.begin(), seen.end(), x) == seen.end()) seen.push_back(x);
    }
  return seen;
}

void structure_tables(Verdict& v) {
  for (long p : primes_below(100)) {
    const int card = p % 4 == 3 ? 4 : (p == 2 ? 2 : 4);
    const int exponent = p % 4 == 3 ? 4 : 2;
    const int one_order = exponent;
    const std::string tag = "p=" + std::to_string(p);
    oracle::FpWittGroup g(p);
    v.require(static_cast<int>(g.elements().size()) == card, tag + " oracle cardinality");
    v.require(g.exponent() == exponent, tag + " oracle exponent");
    v.require(g.order(g.of({1})) == one_order, tag + " oracle order of <1>");
    const auto lib = library_closure(p, p == 2 ? 1 : g.nonresidue());
    v.require(static_cast<int>(lib.size()) == card, tag + " library cardinality");
    int lib_exponent = 1;
    for (const auto& x : lib) lib_exponent = std::max(lib_exponent, x.order());
    v.require(lib_exponent == exponent, tag + " library exponent");
    v.require(unit_class(Integer(p)).order() == one_order, tag + " library order of <1>");
  }
  v.detail << primes_below(100).size() << " primes";
}

void witness_chains(Verdict& v) {
  std::mt19937_64 rng(2024);
  std::size_t links = 0;
  for (int t = 0; t < 500; ++t) {
    const WitnessChain chain = random_witness_chain(rng);
    const WittClassQ expected = witt_class_of(chain.core);
    const std::string tag = "instance " + std::to_string(t);
    for (const auto& link : chain.links) v.require(verify_witness(link).ok, tag + " witness rejected");
    for (const auto& obj : chain.objects) v.require(cobordism_class(obj).witt == expected, tag + " class changed");
    for (const auto& block : chain.blocks)
      v.require(witt_class_of(metabolic_reduce(block).core) == witt_class_of(block.S), tag + " core class lost");
    links += chain.links.size();
  }
  v.detail << "500 chains, " << links << " witnesses";
}

void polarizations(Verdict& v) {
  std::mt19937_64 rng(2025);
  int squarefree = 0, semisimple = 0;
  for (int t = 0; t < 200; ++t) {
    const HodgeFixture fx = random_hodge_fixture(rng, t % 4, 6);
    const PolarizationComparison c = compare_polarizations(fx.h, fx.S, fx.S_prime);
    const std::string tag = "fixture " + std::to_string(t) + " (weight " + std::to_string(t % 4) + ", dim " +
                            std::to_string(fx.h.dim()) + ")";
    squarefree += c.characteristic_squarefree;
    semisimple += c.minimal_annihilates;
    v.require(c.characteristic_squarefree, tag + " characteristic polynomial not squarefree");
    v.require(c.spectrum_positive_real && c.sturm.all_real &&
                  c.sturm.positive_roots == static_cast<int>(c.minimal.degree()),
              tag + " spectrum not real positive");
    v.require(c.identity_chain, tag + " identity chain");
    v.require(c.signature_S == c.signature_S_prime, tag + " signatures differ");
  }
  const auto h = HodgeStructure{0, {{0, 0, to_gaussian(QMatrix::identity(1))}}};
  const BilinearForm one = BilinearForm::diagonal({Rational(1)}), three = BilinearForm::diagonal({Rational(3)});
  const auto w = compare_polarizations(h, one, three);
  v.require(w.holds() && w.signatures_equal(), "<1>/<3> comparison");
  v.require(witt_class_of(one) != witt_class_of(three), "<1> and <3> equal in W(Q)");
  v.detail << "squarefree characteristic " << squarefree << "/200, minimal polynomial annihilates " << semisimple
           << "/200";
}

void sign_calculus(Verdict& v) {
  for (long m = -1000; m <= 1000; ++m) {
    v.require(epsilon(m) == sign_power(m * (m + 1) / 2), "epsilon definition at " + std::to_string(m));
    v.require(epsilon_pair_rule(m), "pair rule at " + std::to_string(m));
  }
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> wd(-8, 8), present(0, 1), jd(0, 7);
  std::uniform_int_distribution<long> sd(-20, 20);
  int all_odd = 0;
  for (int t = 0; t < 1000; ++t) {
    const int w = wd(rng);
    const bool odd_only = t % 4 == 0;
    std::vector<PrimitivePiece> pieces;
    for (int j = 0; j <= 7; ++j)
      if (present(rng) && (!odd_only || j % 2 == 1)) pieces.push_back({j, sd(rng)});
    const LefschetzCheck c = lefschetz_cancellation_check(pieces, w);
    v.require(c.equal && c.lhs_value == c.rhs_value, "lefschetz config " + std::to_string(t));
    if (odd_only) {
      ++all_odd;
      v.require(c.lhs_value == 0 && c.rhs_value == 0, "all-odd config " + std::to_string(t) + " nonzero");
    }
  }
  for (long d = 0; d <= 50; ++d)
    for (long dp = 0; dp <= d; ++dp)
      v.require(sign_dictionary_check(d, dp).holds(), "sign dictionary " + std::to_string(d) + "," + std::to_string(dp));
  v.detail << "1000 configs (" << all_odd << " all-odd), 1326 (d, d') pairs";
}

void chi_y_goldens(Verdict& v) {
  const struct {
    const char* name;
    HodgeDiamond d;
    YPolynomial chi;
    long euler, genus, signature;
  } cases[] = {{"P2", projective_plane_diamond(), {{1, -1, 1}}, 3, 1, 1},
               {"K3", k3_diamond(), {{2, -20, 2}}, 24, 2, -16},
               {"point", point_diamond(), {{1}}, 1, 1, 1}};
  for (const auto& c : cases) {
    const YPolynomial chi = chi_y(c.d);
    const Specialization s = specialize(chi, c.d.n);
    v.require(chi == c.chi, std::string(c.name) + " chi_y");
    v.require(s.euler == c.euler && s.arithmetic_genus == c.genus && s.signature == c.signature,
              std::string(c.name) + " specializations");
    v.detail << c.name << "=" << chi.to_string() << " ";
  }
}

void invariance_suites(Verdict& v) {
  for (const auto& r : run_suites(invariance_suite_names(), 7, 200)) {
    v.require(r.ok(), r.name + (r.messages.empty() ? "" : ": " + r.messages.front()));
    v.detail << r.name << " " << r.cases - r.failures << "/" << r.cases << " ";
  }
}

}  // namespace

int main() {
  const struct {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Verdict&)> run;
  } criteria[] = {
      {1, "double point class is nonzero by two residues", 1, double_point},
      {2, "W(F_p) structure for p < 100", 1, structure_tables},
      {3, "cobordism class constant along witness chains", 30, witness_chains},
      {4, "polarization comparison on random fixtures", 30, polarizations},
      {5, "sign calculus and Lefschetz cancellation", 5, sign_calculus},
      {6, "chi_y golden values", 1, chi_y_goldens},
      {7, "invariance property suites", 60, invariance_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < c.budget_seconds, "over time budget");
    failures += !v.ok;
    std::printf("%s criterion %d: %s [%.3fs / %.0fs] %s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds, v.detail.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
