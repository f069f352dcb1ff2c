#include "wittcob/suites.hpp"

#include "wittcob/cobordism.hpp"
#include "wittcob/hodge.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace wittcob {

namespace {

constexpr std::size_t kMaxMessages = 5;

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result) {}
  void expect(bool ok, const std::function<std::string()>& message) {
    if (ok) return;
    ++result_.failures;
    if (result_.messages.size() < kMaxMessages) result_.messages.push_back(message());
  }

 private:
  SuiteResult& result_;
};

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_nonzero_rational(Rng& rng, long bound) {
  long num = 0;
  while (num == 0) num = uniform(rng, -bound, bound);
  Rational r(num, uniform(rng, 1, bound));
  r.canonicalize();
  return r;
}

QMatrix random_symmetric(Rng& rng, std::size_t n, long bound) {
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = uniform(rng, -bound, bound);
  return m;
}

BilinearForm standard_symplectic(std::size_t pairs) {
  QMatrix j(2 * pairs, 2 * pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    j(2 * k, 2 * k + 1) = 1;
    j(2 * k + 1, 2 * k) = -1;
  }
  return BilinearForm(j, Symmetry::skew);
}

BilinearForm hyperbolic_sum(std::size_t k) {
  BilinearForm h(QMatrix(0, 0), Symmetry::symmetric);
  for (std::size_t i = 0; i < k; ++i) h = direct_sum(h, hyperbolic_plane());
  return h;
}

bool hasse_maps_agree(const FormInvariants& a, const FormInvariants& b) {
  std::set<Place> places;
  for (const auto& [v, s] : a.hasse) places.insert(v);
  for (const auto& [v, s] : b.hasse) places.insert(v);
  auto at = [](const FormInvariants& inv, const Place& v) {
    auto it = inv.hasse.find(v);
    return it == inv.hasse.end() ? 1 : it->second;
  };
  for (const auto& v : places)
    if (at(a, v) != at(b, v)) return false;
  return true;
}

bool invariants_agree(const FormInvariants& a, const FormInvariants& b) {
  return a.rank == b.rank && a.positive == b.positive && a.negative == b.negative &&
         a.discriminant == b.discriminant && hasse_maps_agree(a, b);
}

std::string show(const BilinearForm& f) { return to_string(f.gram()); }

void congruence_invariance(Rng& rng, std::size_t cases, SuiteResult& result) {
  Recorder rec(result);
  for (std::size_t t = 0; t < cases; ++t) {
    const BilinearForm f = random_nondegenerate_form(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 9);
    const BilinearForm g = f.pullback(random_invertible(rng, f.dim(), 2));
    rec.expect(invariants_agree(invariants(f), invariants(g)), [&] { return "invariants changed under congruence: " + show(f); });
    rec.expect(witt_class_of(f) == witt_class_of(g), [&] { return "Witt class changed under congruence: " + show(f); });
    rec.expect(equivalent(f, g), [&] { return "congruent forms not equivalent: " + show(f); });
    // Degenerate input: the class only sees the nondegenerate part.
    const BilinearForm d(random_symmetric(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 4), Symmetry::symmetric);
    const BilinearForm e = d.pullback(random_invertible(rng, d.dim(), 2));
    rec.expect(witt_class_of(d) == witt_class_of(e), [&] { return "degenerate class changed under congruence: " + show(d); });
    result.cases += 2;
  }
}

void hilbert_product_formula(Rng& rng, std::size_t cases, SuiteResult& result) {
  Recorder rec(result);
  for (std::size_t t = 0; t < cases; ++t) {
    const Rational a = random_nonzero_rational(rng, 60);
    const Rational b = random_nonzero_rational(rng, 60);
    std::set<Integer> primes{Integer(2)};
    for (const auto& x : {a, b})
      for (const auto& p : prime_support(x)) primes.insert(p);
    int product = hilbert_symbol(a, b, Place::real());
    for (const auto& p : primes) product *= hilbert_symbol(a, b, Place::prime(p));
    rec.expect(product == 1, [&] { return "product formula fails for (" + to_string(a) + ", " + to_string(b) + ")"; });
    for (const auto& v : primes) {
      const Place place = Place::prime(v);
      rec.expect(hilbert_symbol(a, b, place) == hilbert_symbol(b, a, place),
                 [&] { return "(a,b) != (b,a) at " + place.name(); });
      rec.expect(hilbert_symbol(a, Rational(-a), place) == 1, [&] { return "(a,-a) != 1 at " + place.name(); });
      if (a != 1)
        rec.expect(hilbert_symbol(a, Rational(1 - a), place) == 1, [&] { return "(a,1-a) != 1 at " + place.name(); });
    }
    ++result.cases;
  }
}

void hyperbolic_stabilization(Rng& rng, std::size_t cases, SuiteResult& result) {
  Recorder rec(result);
  for (std::size_t t = 0; t < cases; ++t) {
    const BilinearForm f = random_nondegenerate_form(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 9);
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 2));
    const BilinearForm s = direct_sum(f, hyperbolic_sum(k));
    const BilinearForm g = s.pullback(random_invertible(rng, s.dim(), 2));
    rec.expect(witt_class_of(g) == witt_class_of(f), [&] { return "hyperbolic stabilization changed the class of " + show(f); });
    rec.expect(equivalent(f, g), [&] { return "f and f + H not equivalent: " + show(f); });
    rec.expect(witt_class_of(direct_sum(f, f.negated())).is_zero(), [&] { return "f + (-f) is not zero: " + show(f); });
    rec.expect(invariants(g).rank == f.dim() + 2 * k, [&] { return "rank of f + H is wrong"; });
    ++result.cases;
  }
}

void skew_vanishing(Rng& rng, std::size_t cases, SuiteResult& result) {
  Recorder rec(result);
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t pairs = static_cast<std::size_t>(uniform(rng, 0, 3));
    const BilinearForm f = standard_symplectic(pairs).pullback(random_invertible(rng, 2 * pairs, 2));
    SelfDualComplex c = SelfDualComplex::from_form(f);
    if (uniform(rng, 0, 1)) {
      const int k = static_cast<int>(uniform(rng, 0, 2));
      const int s2 = uniform(rng, 0, 1) ? 1 : -1;
      c = direct_sum(c, acyclic_pair(random_invertible(rng, static_cast<std::size_t>(uniform(rng, 1, 2)), 2), k, s2,
                                     Symmetry::skew));
    }
    const ValidationReport v = validate(c);
    rec.expect(v.valid, [&] { return "generated skew complex invalid: " + v.violations.front(); });
    if (!v.valid) continue;
    const CobordismClass cls = cobordism_class(c);
    rec.expect(cls.skew && cls.witt.is_zero() && cls.symplectic_certificate.has_value(),
               [&] { return "skew complex has a nonzero class"; });
    if (cls.symplectic_certificate) {
      const BilinearForm h0 = h0_form(c);
      rec.expect(h0.pullback(*cls.symplectic_certificate) == standard_symplectic(h0.dim() / 2),
                 [&] { return "symplectic certificate does not reach the standard form"; });
    }
    const WitnessReport w = verify_witness(truncation_witness(c));
    rec.expect(w.ok, [&] { return "truncation witness fails: " + w.failure; });
    ++result.cases;
  }
}

void witt_equality_oracles(Rng& rng, std::size_t cases, SuiteResult& result) {
  Recorder rec(result);
  std::size_t equal_pairs = 0;
  for (std::size_t t = 0; t < cases; ++t) {
    const BilinearForm f = random_nondegenerate_form(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 7);
    BilinearForm g;
    switch (t % 4) {
      case 0:  // independent
        g = random_nondegenerate_form(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 7);
        break;
      case 1: {  // equal class, larger rank
        const BilinearForm s = direct_sum(f, hyperbolic_sum(static_cast<std::size_t>(uniform(rng, 0, 1))));
        g = s.pullback(random_invertible(rng, s.dim(), 2));
        break;
      }
      case 2: {  // one entry scaled by a random rational
        std::vector<Rational> e = diagonalize(f).entries;
        e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(e.size()) - 1))] *= random_nonzero_rational(rng, 7);
        g = BilinearForm::diagonal(e);
        break;
      }
      default: {  // entries scaled by squares
        std::vector<Rational> e = diagonalize(f).entries;
        for (auto& x : e) {
          const Rational s = random_nonzero_rational(rng, 5);
          x *= s * s;
        }
        g = BilinearForm::diagonal(e);
        break;
      }
    }
    const bool by_residues = witt_class_of(f) == witt_class_of(g);
    const bool by_hasse = witt_equal_by_hasse(f, g);
    if (by_residues) ++equal_pairs;
    rec.expect(by_residues == by_hasse, [&] {
      return "oracles disagree on " + show(f) + " vs " + show(g) + ": residues " + (by_residues ? "equal" : "differ");
    });
    ++result.cases;
  }
  result.messages.push_back(std::to_string(equal_pairs) + " of " + std::to_string(result.cases) + " pairs equal in W(Q)");
}

void witness_chains(Rng& rng, std::size_t cases, SuiteResult& result) {
  Recorder rec(result);
  for (std::size_t t = 0; t < cases; ++t) {
    const WitnessChain chain = random_witness_chain(rng);
    const WittClassQ core = witt_class_of(chain.core);
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
      const WitnessReport r = verify_witness(chain.links[i]);
      rec.expect(r.ok, [&] { return "link " + std::to_string(i) + " fails: " + r.failure; });
    }
    for (const auto& obj : chain.objects)
      rec.expect(cobordism_class(obj).witt == core, [&] { return "class changes along a witness chain"; });
    for (const auto& block : chain.blocks)
      rec.expect(witt_class_of(metabolic_reduce(block).core) == witt_class_of(block.S),
                 [&] { return "metabolic reduction changes the class"; });
    if (!chain.links.empty()) {
      const CobordismWitness n = null_witness(chain.links.front());
      const WitnessReport r = verify_witness(n);
      rec.expect(r.ok, [&] { return "null witness fails: " + r.failure; });
      rec.expect(cobordism_class(n.F).witt.is_zero(), [&] { return "null witness object has nonzero class"; });
    }
    ++result.cases;
  }
}

void hodge_polarizations(Rng& rng, std::size_t cases, SuiteResult& result) {
  Recorder rec(result);
  for (std::size_t t = 0; t < cases; ++t) {
    const int w = static_cast<int>(t % 4);
    const HodgeFixture fx = random_hodge_fixture(rng, w);
    const PolarizationComparison c = compare_polarizations(fx.h, fx.S, fx.S_prime);
    rec.expect(c.holds(), [&] { return "comparison not certified at weight " + std::to_string(w); });
    rec.expect(c.phi == fx.psi, [&] { return "recovered phi differs from the generating endomorphism"; });
    const QMatrix cw = weil_operator(fx.h);
    const Rational sign = w % 2 == 0 ? 1 : -1;
    rec.expect(cw * cw == sign * QMatrix::identity(cw.rows()), [&] { return "C^2 != (-1)^w"; });
    rec.expect(pol_class(fx.h, fx.S).witt.signature == pol_class(fx.h, fx.S_prime).witt.signature,
               [&] { return "real class differs between polarizations"; });
    ++result.cases;
  }
}

using SuiteFn = void (*)(Rng&, std::size_t, SuiteResult&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"congruence_invariance", congruence_invariance},
      {"hilbert_product_formula", hilbert_product_formula},
      {"hyperbolic_stabilization", hyperbolic_stabilization},
      {"skew_vanishing", skew_vanishing},
      {"witt_equality_oracles", witt_equality_oracles},
      {"witness_chains", witness_chains},
      {"hodge_polarizations", hodge_polarizations},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<std::string> invariance_suite_names() {
  return {"congruence_invariance", "hilbert_product_formula", "hyperbolic_stabilization", "skew_vanishing",
          "witt_equality_oracles"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult result;
    result.name = name;
    // Each suite gets its own stream so selecting a subset does not shift the others.
    std::uint64_t tag = 1469598103934665603ull;  // FNV-1a of the name
    for (unsigned char ch : name) tag = (tag ^ ch) * 1099511628211ull;
    std::seed_seq seq{seed, tag};
    Rng rng(seq);
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(rng, cases, result);
    } catch (const std::exception& e) {
      ++result.failures;
      result.messages.push_back(std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
  throw std::invalid_argument("unknown property suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed, std::size_t cases) {
  std::vector<SuiteResult> out;
  for (const auto& name : names) out.push_back(run_suite(name, seed, cases));
  return out;
}

}  // namespace wittcob
