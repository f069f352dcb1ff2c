#include "wittcob/cobordism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wittcob {

namespace {

int parity_sign(int i) { return (i % 2 == 0) ? 1 : -1; }

QMatrix identity_or_empty(std::size_t n) { return QMatrix::identity(n); }

void put(DegreeMaps& maps, int i, QMatrix m) {
  if (!m.empty() && !m.is_zero_matrix()) maps[i] = std::move(m);
}

std::vector<int> padded_union(std::initializer_list<const Complex*> complexes) {
  std::set<int> degrees;
  for (const Complex* c : complexes)
    for (int i : c->support()) degrees.insert({i - 1, i, i + 1, -i - 1, -i, -i + 1});
  return {degrees.begin(), degrees.end()};
}

DegreeMaps compose(const DegreeMaps& g, const Complex& mid, const DegreeMaps& f, const Complex& src,
                   const Complex& dst, const std::vector<int>& degrees) {
  DegreeMaps out;
  for (int i : degrees)
    put(out, i, map_at(g, i, dst.dim(i), mid.dim(i)) * map_at(f, i, mid.dim(i), src.dim(i)));
  return out;
}

bool all_in_degree_zero(const Complex& c) {
  for (int i : c.support())
    if (i != 0) return false;
  return true;
}

class Checker {
 public:
  explicit Checker(WitnessReport& report) : report_(report) {}
  bool operator()(const std::string& name, const std::string& defect) {
    const bool ok = defect.empty();
    report_.checks.emplace_back(name, ok);
    if (!ok && report_.ok) {
      report_.ok = false;
      report_.failure = name + ": " + defect;
    }
    return ok;
  }

 private:
  WitnessReport& report_;
};

// Phi^n = [[pi^{n+1}, 0], [s h^{n+1}, pi'^n]] : C(rho') -> C(rho).
DegreeMaps cone_morphism(const CobordismWitness& w, const DegreeMaps& pi, const DegreeMaps& pi_prime,
                         const DegreeMaps& h, const Complex& G, const Complex& F, const Complex& Fp,
                         const Complex& Gp, const Complex& source, const Complex& target, int s) {
  (void)w;
  DegreeMaps out;
  std::set<int> degrees;
  for (int n : source.support()) degrees.insert(n);
  for (int n : target.support()) degrees.insert(n);
  for (int n : degrees) {
    QMatrix phi(target.dim(n), source.dim(n));
    if (phi.empty()) continue;
    phi.set_block(0, 0, map_at(pi, n + 1, F.dim(n + 1), G.dim(n + 1)));
    phi.set_block(F.dim(n + 1), 0, Rational(s) * map_at(h, n + 1, Gp.dim(n), G.dim(n + 1)));
    phi.set_block(F.dim(n + 1), G.dim(n + 1), map_at(pi_prime, n, Gp.dim(n), Fp.dim(n)));
    put(out, n, phi);
  }
  return out;
}

std::string rank_defect(const QMatrix& m, bool want_surjective, const char* name) {
  const std::size_t r = rank(m);
  if (want_surjective ? r == m.rows() : r == m.cols()) return {};
  return std::string(name) + (want_surjective ? " is not surjective" : " is not injective");
}

}  // namespace

SelfDualComplex::SelfDualComplex(Complex complex, DegreeMaps pairing, Symmetry symmetry)
    : complex_(std::move(complex)), symmetry_(symmetry) {
  for (const auto& [i, m] : pairing) put(pairing_, i, map_at(pairing, i, complex_.dim(i), complex_.dim(-i)));
  const DegreeMaps given = pairing_;
  for (const auto& [i, m] : given)
    if (!given.count(-i)) put(pairing_, -i, Rational(parity_sign(i) * epsilon()) * m.transpose());
}

SelfDualComplex SelfDualComplex::from_form(const BilinearForm& f) {
  if (!f.over_rationals()) throw std::invalid_argument("self-dual complexes are defined over Q");
  DegreeMaps pairing;
  put(pairing, 0, f.gram());
  return SelfDualComplex(degree_zero_complex(f.dim()), std::move(pairing), f.symmetry());
}

QMatrix SelfDualComplex::S(int i) const { return map_at(pairing_, i, complex_.dim(i), complex_.dim(-i)); }

SelfDualComplex SelfDualComplex::negated() const {
  DegreeMaps neg;
  for (const auto& [i, m] : pairing_) neg[i] = -m;
  return SelfDualComplex(complex_, std::move(neg), symmetry_);
}

SelfDualComplex direct_sum(const SelfDualComplex& a, const SelfDualComplex& b) {
  if (a.symmetry() != b.symmetry()) throw std::invalid_argument("direct sum of complexes of different symmetry");
  const Complex& ca = a.complex();
  const Complex& cb = b.complex();
  const auto degrees = padded_union({&ca, &cb});
  DegreeMaps pairing = direct_sum_maps(
      a.pairing(), [&](int i) { return std::make_pair(ca.dim(i), ca.dim(-i)); }, b.pairing(),
      [&](int i) { return std::make_pair(cb.dim(i), cb.dim(-i)); }, degrees);
  return SelfDualComplex(direct_sum(ca, cb), std::move(pairing), a.symmetry());
}

ValidationReport validate(const SelfDualComplex& c) {
  ValidationReport report;
  auto fail = [&](std::string message) {
    report.valid = false;
    report.violations.push_back(std::move(message));
  };
  const Complex& f = c.complex();
  if (auto defect = f.differential_defect(); !defect.empty()) {
    fail("differential: " + defect);
    return report;
  }
  for (int i : padded_union({&f})) {
    if (i < 0) continue;
    const QMatrix si = c.S(i);
    const QMatrix sm = c.S(-i);
    const Rational sign = parity_sign(i) * c.epsilon();
    for (std::size_t r = 0; r < si.rows(); ++r)
      for (std::size_t col = 0; col < si.cols(); ++col)
        if (sm(col, r) != sign * si(r, col)) {
          fail("symmetry: S(v, u) != (-1)^i eps S(u, v) for u = e_" + std::to_string(r) + " in degree " +
               std::to_string(i) + ", v = e_" + std::to_string(col) + " in degree " + std::to_string(-i) +
               " (S(u, v) = " + to_string(si(r, col)) + ", S(v, u) = " + to_string(sm(col, r)) + ")");
          r = si.rows();
          break;
        }
  }
  if (auto defect = pairing_chain_defect(f, f, c.pairing()); !defect.empty()) fail("chain condition: " + defect);
  for (int i : padded_union({&f})) {
    const std::size_t h = cohomology(f, i).dim();
    if (h) report.cohomology_dims[i] = h;
  }
  if (!report.valid) return report;
  for (const auto& [i, h] : report.cohomology_dims) {
    const QMatrix r = induced_pairing(f, f, c.pairing(), i);
    report.induced_pairings[i] = r;
    if (!r.is_square() || rank(r) != r.rows())
      fail("perfectness: induced pairing on H^" + std::to_string(i) + " x H^" + std::to_string(-i) +
           " is degenerate: " + to_string(r));
  }
  return report;
}

BilinearForm h0_form(const SelfDualComplex& c) {
  const ValidationReport report = validate(c);
  if (!report.valid) throw std::invalid_argument("invalid self-dual complex: " + report.violations.front());
  return BilinearForm(induced_pairing(c.complex(), c.complex(), c.pairing(), 0), c.symmetry());
}

std::string to_string(WitnessKind kind) {
  return kind == WitnessKind::direct ? "direct" : "direct_subquotient";
}

WitnessReport verify_witness(const CobordismWitness& w) {
  WitnessReport report;
  Checker check(report);
  const Complex& F = w.F.complex();
  const Complex& Fp = w.F_prime.complex();
  const Complex& G = w.G;
  const Complex& Gp = w.G_prime;

  if (w.F.symmetry() != w.F_prime.symmetry()) check("symmetry", "F and F' have different symmetry");
  for (const auto& [name, obj] : {std::pair{"F", &w.F}, std::pair{"F'", &w.F_prime}}) {
    const auto v = validate(*obj);
    check(std::string(name) + " valid", v.valid ? "" : v.violations.front());
  }
  check("G differential", G.differential_defect());
  check("G' differential", Gp.differential_defect());
  if (!report.ok) return report;

  try {
    check("pi chain map", chain_map_defect(G, F, w.pi));
    check("rho chain map", chain_map_defect(F, Gp, w.rho));
    check("rho' chain map", chain_map_defect(G, Fp, w.rho_prime));
    check("pi' chain map", chain_map_defect(Fp, Gp, w.pi_prime));
    check("S'' chain condition", pairing_chain_defect(G, Gp, w.S_pp));
    if (!report.ok) return report;
    check("S'' perfect on cohomology", pairing_perfectness_defect(G, Gp, w.S_pp));

    const auto degrees = padded_union({&F, &Fp, &G, &Gp});
    std::string adj1, adj2;
    for (int i : degrees) {
      const QMatrix spp = map_at(w.S_pp, i, G.dim(i), Gp.dim(-i));
      const QMatrix l1 = map_at(w.pi, i, F.dim(i), G.dim(i)).transpose() * w.F.S(i);
      const QMatrix r1 = spp * map_at(w.rho, -i, Gp.dim(-i), F.dim(-i));
      if (adj1.empty() && !(l1 == r1))
        adj1 = "degree " + std::to_string(i) + ": pi^T S = " + to_string(l1) + ", S'' rho = " + to_string(r1);
      const QMatrix l2 = map_at(w.rho_prime, i, Fp.dim(i), G.dim(i)).transpose() * w.F_prime.S(i);
      const QMatrix r2 = spp * map_at(w.pi_prime, -i, Gp.dim(-i), Fp.dim(-i));
      if (adj2.empty() && !(l2 == r2))
        adj2 = "degree " + std::to_string(i) + ": rho'^T S' = " + to_string(l2) + ", S'' pi' = " + to_string(r2);
    }
    check("adjointness S(pi g, x) = S''(g, rho x)", adj1);
    check("adjointness S'(rho' g, y) = S''(g, pi' y)", adj2);

    const DegreeMaps upper = compose(w.pi_prime, Fp, w.rho_prime, G, Gp, degrees);
    const DegreeMaps lower = compose(w.rho, F, w.pi, G, Gp, degrees);
    std::string on_nose;
    for (int i : degrees)
      if (!(map_at(upper, i, Gp.dim(i), G.dim(i)) == map_at(lower, i, Gp.dim(i), G.dim(i)))) {
        on_nose = "pi' rho' != rho pi in degree " + std::to_string(i);
        break;
      }

    bool chain_level = false;
    DegreeMaps h;
    if (w.kind == WitnessKind::direct_subquotient) {
      check("commutes on the nose", on_nose);
      chain_level = true;
      for (const Complex* c : {&F, &Fp, &G, &Gp})
        if (!all_in_degree_zero(*c)) check("degree-0 objects", "subquotient witness has a nonzero degree");
      const QMatrix p0 = map_at(w.pi, 0, F.dim(0), G.dim(0));
      const QMatrix r0 = map_at(w.rho_prime, 0, Fp.dim(0), G.dim(0));
      const bool first = rank_defect(p0, true, "pi").empty() && rank_defect(r0, false, "rho'").empty();
      const bool second = rank_defect(p0, false, "pi").empty() && rank_defect(r0, true, "rho'").empty();
      check("(pi, rho') is (surjective, injective) or (injective, surjective)",
            first || second ? "" : "neither pattern holds");
    } else if (w.homotopy) {
      h = *w.homotopy;
      std::string defect;
      for (int i : degrees) {
        const QMatrix hi = map_at(h, i, Gp.dim(i - 1), G.dim(i));
        const QMatrix hi1 = map_at(h, i + 1, Gp.dim(i), G.dim(i + 1));
        const QMatrix dh = Gp.d(i - 1) * hi + hi1 * G.d(i);
        const QMatrix diff = map_at(upper, i, Gp.dim(i), G.dim(i)) - map_at(lower, i, Gp.dim(i), G.dim(i));
        if (!(diff == dh)) {
          defect = "pi' rho' - rho pi != d h + h d in degree " + std::to_string(i);
          break;
        }
      }
      check("commutes up to the given homotopy", defect);
      chain_level = true;
    } else if (on_nose.empty()) {
      check("commutes on the nose", "");
      chain_level = true;
    } else {
      std::string defect;
      for (int i : degrees)
        if (!(induced_map(G, Gp, upper, i) == induced_map(G, Gp, lower, i))) {
          defect = "pi' rho' != rho pi on H^" + std::to_string(i);
          break;
        }
      check("commutes on cohomology", defect);
    }
    if (!report.ok) return report;

    if (chain_level) {
      const Complex source = mapping_cone(G, Fp, w.rho_prime);
      const Complex target = mapping_cone(F, Gp, w.rho);
      std::string defect = "no sign makes the cone morphism a chain map";
      for (int s : {1, -1}) {
        const DegreeMaps phi = cone_morphism(w, w.pi, w.pi_prime, h, G, F, Fp, Gp, source, target, s);
        if (!chain_map_defect(source, target, phi).empty()) continue;
        report.cone_sign = s;
        defect = is_quasi_isomorphism(source, target, phi) ? "" : "cone morphism is not a quasi-isomorphism";
        DegreeMaps neg;
        for (const auto& [n, m] : phi) neg[n] = -m;
        check("negated cone morphism is a quasi-isomorphism",
              is_quasi_isomorphism(source, target, neg) == defect.empty() ? "" : "rank depends on sign");
        break;
      }
      check("cone C(rho') -> C(rho) is an isomorphism", defect);
    } else {
      const Complex hG = cohomology_complex(G), hF = cohomology_complex(F);
      const Complex hFp = cohomology_complex(Fp), hGp = cohomology_complex(Gp);
      const DegreeMaps pi = cohomology_maps(G, F, w.pi), rho = cohomology_maps(F, Gp, w.rho);
      const DegreeMaps rho_p = cohomology_maps(G, Fp, w.rho_prime), pi_p = cohomology_maps(Fp, Gp, w.pi_prime);
      const Complex source = mapping_cone(hG, hFp, rho_p);
      const Complex target = mapping_cone(hF, hGp, rho);
      const DegreeMaps phi = cone_morphism(w, pi, pi_p, {}, hG, hF, hFp, hGp, source, target, 1);
      report.cone_sign = 1;
      check("cohomology cone morphism is a chain map", chain_map_defect(source, target, phi));
      if (report.ok)
        check("cone C(rho') -> C(rho) is an isomorphism on the cohomology model",
              is_quasi_isomorphism(source, target, phi) ? "" : "cone morphism is not a quasi-isomorphism");
    }
  } catch (const std::invalid_argument& e) {
    check("shapes", e.what());
  }
  return report;
}

CobordismWitness truncation_witness(const SelfDualComplex& c) {
  const ValidationReport report = validate(c);
  if (!report.valid) throw std::invalid_argument("invalid self-dual complex: " + report.violations.front());
  const Complex& F = c.complex();
  const std::size_t n0 = F.dim(0);
  const CohomologyData h = cohomology(F, 0);
  const QMatrix& hrep = h.reps;
  const QMatrix& bb = h.boundaries;
  const QMatrix zb = hstack(hrep, bb);
  const QMatrix id0 = identity_or_empty(n0);
  const QMatrix cb = hstack(hrep, complement_basis(hstack(bb, hrep), id0));
  const QMatrix full = hstack(bb, cb);
  const QMatrix p0 = (*inverse(full)).rows_range(bb.cols(), n0 - bb.cols());
  const std::size_t zdim = hrep.cols() + bb.cols();
  const std::size_t qdim = n0 - bb.cols();

  std::map<int, std::size_t> gdims, gpdims;
  DegreeMaps gd, gpd, pi, rho, spp;
  for (int i : F.support()) {
    if (i < 0) {
      gdims[i] = F.dim(i);
      put(pi, i, QMatrix::identity(F.dim(i)));
      put(spp, i, c.S(i));
    }
    if (i > 0) {
      gpdims[i] = F.dim(i);
      put(rho, i, QMatrix::identity(F.dim(i)));
    }
  }
  gdims[0] = zdim;
  gpdims[0] = qdim;
  for (int i : F.support()) {
    if (i < -1) put(gd, i, F.d(i));
    if (i >= 1) put(gpd, i, F.d(i));
  }
  if (F.dim(-1)) put(gd, -1, zdim ? *solve(zb, F.d(-1)) : QMatrix(0, F.dim(-1)));
  if (qdim) put(gpd, 0, F.d(0) * cb);
  put(pi, 0, zb);
  put(rho, 0, p0);
  put(spp, 0, zb.transpose() * c.S(0) * cb);

  CobordismWitness w;
  w.kind = WitnessKind::direct;
  w.F = c;
  w.F_prime = SelfDualComplex::from_form(BilinearForm(hrep.transpose() * c.S(0) * hrep, c.symmetry()));
  w.G = Complex(std::move(gdims), std::move(gd));
  w.G_prime = Complex(std::move(gpdims), std::move(gpd));
  w.pi = std::move(pi);
  w.rho = std::move(rho);
  QMatrix rp(hrep.cols(), zdim);
  rp.set_block(0, 0, QMatrix::identity(hrep.cols()));
  put(w.rho_prime, 0, rp);
  put(w.pi_prime, 0, p0 * hrep);
  w.S_pp = std::move(spp);
  return w;
}

CobordismWitness reversed(const CobordismWitness& w) {
  CobordismWitness r = w;
  std::swap(r.F, r.F_prime);
  r.pi = w.rho_prime;
  r.rho_prime = w.pi;
  r.rho = w.pi_prime;
  r.pi_prime = w.rho;
  if (w.homotopy) {
    DegreeMaps neg;
    for (const auto& [i, m] : *w.homotopy) neg[i] = -m;
    r.homotopy = std::move(neg);
  }
  return r;
}

CobordismWitness null_witness(const CobordismWitness& w) {
  const Complex& F = w.F.complex();
  const Complex& Fp = w.F_prime.complex();
  const Complex& G = w.G;
  const Complex& Gp = w.G_prime;
  CobordismWitness n;
  n.kind = WitnessKind::direct;
  n.F = direct_sum(w.F_prime, w.F.negated());
  n.F_prime = SelfDualComplex(Complex(), {}, w.F.symmetry());
  n.G = G;
  n.G_prime = Gp;
  n.S_pp = w.S_pp;
  for (int i : padded_union({&F, &Fp, &G, &Gp})) {
    // (rho', pi) : G -> F' (+) F and (pi', -rho) : F' (+) F -> G'.
    put(n.pi, i, vstack(map_at(w.rho_prime, i, Fp.dim(i), G.dim(i)), map_at(w.pi, i, F.dim(i), G.dim(i))));
    const QMatrix r = hstack(map_at(w.pi_prime, i, Gp.dim(i), Fp.dim(i)), -map_at(w.rho, i, Gp.dim(i), F.dim(i)));
    put(n.rho, i, r.rows() == Gp.dim(i) && r.cols() == Fp.dim(i) + F.dim(i) ? r : QMatrix(Gp.dim(i), Fp.dim(i) + F.dim(i)));
  }
  if (w.homotopy) {
    DegreeMaps neg;
    for (const auto& [i, m] : *w.homotopy) neg[i] = -m;
    n.homotopy = std::move(neg);
  }
  return n;
}

CobordismWitness isometry_witness(const BilinearForm& f, const QMatrix& q) {
  const auto q_inv = inverse(q);
  if (!q_inv) throw std::invalid_argument("isometry witness needs an invertible change of basis");
  const std::size_t n = f.dim();
  CobordismWitness w;
  w.kind = WitnessKind::direct;
  w.F = SelfDualComplex::from_form(f);
  w.F_prime = SelfDualComplex::from_form(f.pullback(q));
  w.G = degree_zero_complex(n);
  w.G_prime = degree_zero_complex(n);
  put(w.pi, 0, QMatrix::identity(n));
  put(w.rho, 0, QMatrix::identity(n));
  put(w.rho_prime, 0, *q_inv);
  put(w.pi_prime, 0, q);
  put(w.S_pp, 0, f.gram());
  return w;
}

OrthogonalSplit orthogonal_split(const BilinearForm& f, const QMatrix& sub) {
  if (!f.over_rationals()) throw std::invalid_argument("orthogonal_split: form must be over Q");
  if (!f.is_nondegenerate()) throw std::domain_error("orthogonal_split: form is degenerate");
  const std::size_t n = f.dim();
  const std::size_t k = sub.cols();
  if (sub.rows() != n) throw std::invalid_argument("subspace basis has " + std::to_string(sub.rows()) + " rows, form has dimension " + std::to_string(n));
  if (rank(sub) != k) throw std::invalid_argument("subspace basis is not linearly independent");
  const QMatrix& m = f.gram();
  const QMatrix restricted = sub.transpose() * m * sub;
  QMatrix perp = k ? kernel(sub.transpose() * m) : QMatrix::identity(n);
  if (perp.rows() != n) perp = QMatrix(n, 0);
  OrthogonalSplit out;
  out.sub = sub;
  out.restricted = BilinearForm(restricted, f.symmetry());
  if (k > 0 && rank(restricted) == k) {
    out.split = true;
    out.complement = perp;
    out.orthogonal = f.pullback(perp);
    return out;
  }
  if (!restricted.is_zero_matrix())
    throw std::domain_error("restriction is neither nondegenerate nor totally isotropic; extract its radical first");
  // Isotropic L: basis [L | Q | R] with [L | Q] spanning L-perp.
  QMatrix qb = complement_basis(sub, perp);
  if (qb.rows() != n) qb = QMatrix(n, 0);
  QMatrix lq = hstack(sub, qb);
  if (lq.rows() != n) lq = QMatrix(n, 0);
  QMatrix rb = complement_basis(lq, QMatrix::identity(n));
  if (rb.rows() != n) rb = QMatrix(n, 0);
  const QMatrix full = hstack(lq, rb);
  const QMatrix inv = *inverse(full);
  const std::size_t q = qb.cols();
  const QMatrix qr = hstack(qb, rb).rows() == n ? hstack(qb, rb) : QMatrix(n, 0);

  out.split = false;
  out.complement = qb;
  out.orthogonal = f.pullback(qb);

  CobordismWitness w;
  w.kind = WitnessKind::direct_subquotient;
  w.F = SelfDualComplex::from_form(out.orthogonal);
  w.F_prime = SelfDualComplex::from_form(f);
  w.G = degree_zero_complex(k + q);
  w.G_prime = degree_zero_complex(n - k);
  QMatrix pi(q, k + q);
  pi.set_block(0, k, QMatrix::identity(q));
  QMatrix rho(n - k, q);
  rho.set_block(0, 0, QMatrix::identity(q));
  put(w.pi, 0, pi);
  put(w.rho, 0, rho);
  put(w.rho_prime, 0, lq);
  put(w.pi_prime, 0, inv.rows_range(k, n - k));
  put(w.S_pp, 0, lq.transpose() * m * qr);
  out.witness = std::move(w);
  return out;
}

namespace {

// Isotropic-branch split that also accepts the zero subspace.
OrthogonalSplit isotropic_split(const BilinearForm& f, const QMatrix& sub) {
  OrthogonalSplit s = orthogonal_split(f, sub);
  if (s.split) throw std::logic_error("expected an isotropic subspace");
  return s;
}

}  // namespace

Prop11dResult prop11d_construct(const CobordismWitness& w) {
  const WitnessReport report = verify_witness(w);
  if (!report.ok) throw std::invalid_argument("witness does not verify: " + report.failure);
  const Complex& F = w.F.complex();
  const Complex& Fp = w.F_prime.complex();
  const QMatrix pi0 = induced_map(w.G, F, w.pi, 0);
  const QMatrix rho0 = induced_map(F, w.G_prime, w.rho, 0);
  const QMatrix rhop0 = induced_map(w.G, Fp, w.rho_prime, 0);
  const QMatrix pip0 = induced_map(Fp, w.G_prime, w.pi_prime, 0);
  const BilinearForm h0 = h0_form(w.F);
  const BilinearForm h0p = h0_form(w.F_prime);

  auto kernel_in = [](const QMatrix& m, std::size_t n) {
    QMatrix k = kernel(m);
    return k.rows() == n ? k : QMatrix(n, 0);
  };
  const QMatrix l_dd = kernel_in(rho0, h0.dim());
  const QMatrix l_dd_p = kernel_in(pip0, h0p.dim());
  if (!in_span(image_basis(pi0), l_dd) || !in_span(image_basis(rhop0), l_dd_p))
    throw std::logic_error("Ker rho^0 is not contained in Im pi^0");

  Prop11dResult out;
  out.to_F = isotropic_split(h0, l_dd);
  out.to_F_prime = isotropic_split(h0p, l_dd_p);

  const QMatrix delta = rho0 * pi0;
  const auto ech = row_reduce(delta);
  QMatrix a(w.G.dim(0) ? pi0.cols() : 0, ech.pivots.size());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) a(ech.pivots[k], k) = 1;
  const QMatrix pa = pi0 * a;
  const QMatrix core = pa.transpose() * h0.gram() * pa;
  const QMatrix spp0 = induced_pairing(w.G, w.G_prime, w.S_pp, 0);
  out.core = BilinearForm(core, w.F.symmetry());
  out.core_matches_S_pp = core == a.transpose() * spp0 * delta * a;
  if (w.F.symmetry() == Symmetry::symmetric) {
    const WittClassQ c = witt_class_of(out.core);
    out.classes_agree = c == witt_class_of(h0) && c == witt_class_of(h0p) &&
                        c == witt_class_of(out.to_F.orthogonal) && c == witt_class_of(out.to_F_prime.orthogonal);
  } else {
    out.classes_agree = true;
  }
  out.classes_agree = out.classes_agree && verify_witness(*out.to_F.witness).ok &&
                      verify_witness(*out.to_F_prime.witness).ok;
  return out;
}

CobordismClass cobordism_class(const SelfDualComplex& c) {
  const BilinearForm h0 = h0_form(c);
  CobordismClass out;
  if (c.symmetry() == Symmetry::skew) {
    out.skew = true;
    out.symplectic_certificate = symplectic_reduce(h0).congruence;
    return out;
  }
  out.witt = witt_class_of(h0);
  return out;
}

SelfDualComplex acyclic_pair(const QMatrix& d, int k, int s2, Symmetry symmetry) {
  if (!d.is_square() || !inverse(d)) throw std::invalid_argument("acyclic pair needs an invertible square map");
  if (k < 0) throw std::invalid_argument("acyclic pair degree must be nonnegative");
  const std::size_t a = d.rows();
  const int eps = epsilon_of(symmetry);
  // Chain condition forces d^{-k-1} = -(-1)^k s2 d^T when S_k = I, S_{k+1} = s2 I.
  const QMatrix dual = Rational(-parity_sign(k) * s2) * d.transpose();
  std::map<int, std::size_t> dims;
  DegreeMaps diffs, pairing;
  if (k == 0) {
    dims = {{-1, a}, {0, 2 * a}, {1, a}};
    QMatrix dm1(2 * a, a), d0(a, 2 * a), s0(2 * a, 2 * a);
    dm1.set_block(a, 0, dual);
    d0.set_block(0, 0, d);
    s0.set_block(0, a, QMatrix::identity(a));
    s0.set_block(a, 0, Rational(eps) * QMatrix::identity(a));
    diffs = {{-1, dm1}, {0, d0}};
    pairing = {{0, s0}, {1, Rational(s2) * QMatrix::identity(a)}};
  } else {
    dims = {{-k - 1, a}, {-k, a}, {k, a}, {k + 1, a}};
    diffs = {{-k - 1, dual}, {k, d}};
    pairing = {{k, QMatrix::identity(a)}, {k + 1, Rational(s2) * QMatrix::identity(a)}};
  }
  return SelfDualComplex(Complex(std::move(dims), std::move(diffs)), std::move(pairing), symmetry);
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  while (true) {
    QMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
    if (n == 0 || sgn(determinant(m)) != 0) return m;
  }
}

BilinearForm random_nondegenerate_form(std::mt19937_64& rng, std::size_t rank, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Rational> entries;
  while (entries.size() < rank) {
    const long x = dist(rng);
    if (x != 0) entries.emplace_back(x);
  }
  return BilinearForm::diagonal(entries).pullback(random_invertible(rng, rank, 2));
}

WitnessChain random_witness_chain(std::mt19937_64& rng, const ChainOptions& options) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::uniform_int_distribution<long> small(-options.entry_bound, options.entry_bound);
  WitnessChain chain;
  chain.core = random_nondegenerate_form(rng, pick(1, options.max_core_rank), options.entry_bound);
  BilinearForm x = chain.core;

  std::vector<int> ops(pick(0, options.max_blocks), 0);
  ops.insert(ops.end(), pick(0, options.max_congruences), 1);
  std::shuffle(ops.begin(), ops.end(), rng);
  for (int op : ops) {
    const std::size_t m = x.dim();
    if (op == 0) {
      const std::size_t k = pick(1, 2);
      QMatrix a(k, k), b(m, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) a(i, j) = a(j, i) = small(rng);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) b(i, j) = small(rng);
      BlockMetabolicForm block{x, a, b};
      const BilinearForm y = block.assemble();
      const OrthogonalSplit split = orthogonal_split(y, QMatrix::identity(y.dim()).columns(0, k));
      const QMatrix beta = split.complement.rows_range(k, m);
      CobordismWitness to_quotient = isometry_witness(x, beta);
      if (!(to_quotient.F_prime == split.witness->F))
        throw std::logic_error("subquotient of a metabolic block is not congruent to its core");
      chain.links.push_back(std::move(to_quotient));
      chain.links.push_back(*split.witness);
      chain.blocks.push_back(std::move(block));
      x = y;
    } else {
      const QMatrix p = random_invertible(rng, m, 2);
      chain.links.push_back(isometry_witness(x, p));
      x = x.pullback(p);
    }
  }

  if (pick(0, options.max_acyclic) > 0) {
    const std::size_t a = pick(1, 2);
    const int k = static_cast<int>(pick(0, 2));
    const int s2 = pick(0, 1) ? 1 : -1;
    const SelfDualComplex y =
        direct_sum(SelfDualComplex::from_form(x), acyclic_pair(random_invertible(rng, a, 2), k, s2, x.symmetry()));
    const CobordismWitness t = truncation_witness(y);
    const QMatrix q = cohomology(y.complex(), 0).reps.rows_range(0, x.dim());
    CobordismWitness to_h0 = isometry_witness(x, q);
    if (!(to_h0.F_prime == t.F_prime)) throw std::logic_error("H^0 of an acyclic extension is not congruent to the base");
    chain.links.push_back(std::move(to_h0));
    chain.links.push_back(reversed(t));
  }

  chain.objects.push_back(chain.links.empty() ? SelfDualComplex::from_form(chain.core) : chain.links.front().F);
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    if (!(chain.links[i].F == chain.objects.back()))
      throw std::logic_error("witness chain link " + std::to_string(i) + " does not start at the previous object");
    chain.objects.push_back(chain.links[i].F_prime);
  }
  return chain;
}

}  // namespace wittcob
