#include "wittcob/json_io.hpp"

#include <fstream>
#include <sstream>

namespace wittcob {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& require(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(pointer, key), "missing required field");
  return *it;
}

long integer_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  return j.get<long>();
}

int degree_key(const std::string& key, const std::string& pointer) {
  try {
    std::size_t used = 0;
    const int i = std::stoi(key, &used);
    if (used == key.size()) return i;
  } catch (const std::exception&) {
  }
  throw SchemaError(child(pointer, key), "degree keys must be integers");
}

Symmetry symmetry_from_json(const Json& j, const std::string& pointer) {
  if (j.is_string()) {
    if (j == "symmetric") return Symmetry::symmetric;
    if (j == "skew") return Symmetry::skew;
  }
  if (j.is_number_integer()) {
    if (j == 1) return Symmetry::symmetric;
    if (j == -1) return Symmetry::skew;
  }
  throw SchemaError(pointer, "symmetry must be \"symmetric\" or \"skew\"");
}

// Missing maps are zero; given maps must match the expected shape.
DegreeMaps shaped_maps(const Json& j, const std::string& pointer,
                       const std::function<std::pair<std::size_t, std::size_t>(int)>& shape) {
  DegreeMaps raw;
  if (j.is_null()) return raw;
  if (!j.is_object()) throw SchemaError(pointer, "expected an object keyed by degree");
  for (const auto& [key, value] : j.items()) {
    const int i = degree_key(key, pointer);
    const auto [rows, cols] = shape(i);
    QMatrix m = matrix_from_json(value, child(pointer, key), cols);
    if (m.rows() == 0 && rows == 0) m = QMatrix(0, cols);
    if (m.rows() != rows || m.cols() != cols)
      throw SchemaError(child(pointer, key), "shape " + m.shape() + ", expected " + std::to_string(rows) + "x" +
                                                 std::to_string(cols));
    raw[i] = std::move(m);
  }
  return raw;
}

// "field": "Q" | {"Fp": p}; "prime": p is accepted as shorthand.
std::int64_t field_from_json(const Json& j, const std::string& pointer) {
  if (j.contains("field")) {
    const Json& f = j["field"];
    const std::string at = child(pointer, "field");
    if (f.is_string() && f == "Q") return 0;
    if (f.is_object() && f.contains("Fp")) return integer_from_json(f["Fp"], child(at, "Fp"));
    throw SchemaError(at, "field must be \"Q\" or {\"Fp\": p}");
  }
  return j.contains("prime") ? integer_from_json(j["prime"], child(pointer, "prime")) : 0;
}

Json optional_field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? Json() : *it;
}

}  // namespace

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/", std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(pointer.empty() ? "/" : pointer, e.what());
    }
  }
  throw SchemaError(pointer.empty() ? "/" : pointer, "expected a rational string or an integer");
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j, const std::string& pointer, std::size_t empty_cols) {
  if (!j.is_array()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected a matrix (array of rows)");
  if (j.empty()) return QMatrix(0, empty_cols);
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  QMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) throw SchemaError(child(pointer, r), "rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c], child(child(pointer, r), c));
  }
  return m;
}

Json form_to_json(const BilinearForm& f) {
  Json j;
  j["symmetry"] = to_string(f.symmetry());
  j["field"] = f.over_rationals() ? Json("Q") : Json{{"Fp", f.prime()}};
  j["gram"] = matrix_to_json(f.gram());
  return j;
}

BilinearForm form_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected a form object");
  const Symmetry sym = j.contains("symmetry") ? symmetry_from_json(j["symmetry"], child(pointer, "symmetry"))
                                              : Symmetry::symmetric;
  const std::int64_t prime = field_from_json(j, pointer);
  QMatrix gram;
  if (j.contains("gram")) {
    gram = matrix_from_json(j["gram"], child(pointer, "gram"));
  } else if (j.contains("diagonal")) {
    const Json& d = j["diagonal"];
    if (!d.is_array()) throw SchemaError(child(pointer, "diagonal"), "expected an array");
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < d.size(); ++i) entries.push_back(rational_from_json(d[i], child(child(pointer, "diagonal"), i)));
    gram = QMatrix::diagonal(entries);
  } else {
    throw SchemaError(child(pointer, "gram"), "missing required field (or \"diagonal\")");
  }
  try {
    return BilinearForm(std::move(gram), sym, prime);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(pointer.empty() ? "/" : pointer, e.what());
  }
}

Json invariants_to_json(const FormInvariants& inv) {
  Json j;
  j["rank"] = inv.rank;
  j["positive"] = inv.positive;
  j["negative"] = inv.negative;
  j["signature"] = inv.positive - inv.negative;
  j["discriminant"] = to_string(inv.discriminant.rep());
  Json hasse = Json::array();
  for (const auto& [place, value] : inv.hasse) hasse.push_back({{"place", place.name()}, {"value", value}});
  j["hasse"] = std::move(hasse);
  return j;
}

Json fp_class_to_json(const WittClassFp& c) {
  static const char* groups[] = {"Z/2", "Z/4", "Z/2xZ/2"};
  Json j;
  // Integer when it fits; primes beyond 64 bits fall back to decimal strings.
  if (c.prime().fits_slong_p())
    j["p"] = c.prime().get_si();
  else
    j["p"] = c.prime().get_str();
  j["group"] = groups[static_cast<int>(c.kind())];
  j["value"] = c.value();
  if (c.kind() == WittClassFp::Kind::one_mod_four) j["nonresidue_disc"] = c.nonresidue_disc();
  j["order"] = c.order();
  j["class"] = c.to_string();
  return j;
}

WittClassFp fp_class_from_json(const Json& j, const std::string& pointer) {
  const Json& p = require(j, "p", pointer);
  Integer prime;
  if (p.is_string()) {
    if (prime.set_str(p.get<std::string>(), 10) != 0) throw SchemaError(child(pointer, "p"), "expected a prime");
  } else {
    prime = Integer(integer_from_json(p, child(pointer, "p")));
  }
  const long value = integer_from_json(require(j, "value", pointer), child(pointer, "value"));
  const bool nonresidue = j.contains("nonresidue_disc") && j["nonresidue_disc"].is_boolean() && j["nonresidue_disc"].get<bool>();
  try {
    return WittClassFp(prime, static_cast<int>(value), nonresidue);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(child(pointer, "p"), e.what());
  }
}

Json witt_class_to_json(const WittClassQ& c) {
  Json j;
  j["signature"] = c.signature;
  Json residues = Json::array();
  for (const auto& [p, r] : c.residues) residues.push_back(fp_class_to_json(r));
  j["residues"] = std::move(residues);
  j["zero"] = c.is_zero();
  return j;
}

WittClassQ witt_class_from_json(const Json& j, const std::string& pointer) {
  WittClassQ c;
  c.signature = integer_from_json(require(j, "signature", pointer), child(pointer, "signature"));
  const Json& residues = require(j, "residues", pointer);
  if (!residues.is_array()) throw SchemaError(child(pointer, "residues"), "expected an array");
  for (std::size_t i = 0; i < residues.size(); ++i) {
    WittClassFp r = fp_class_from_json(residues[i], child(child(pointer, "residues"), i));
    if (!r.is_zero()) c.residues.emplace(r.prime(), r);
  }
  return c;
}

BlockMetabolicForm block_from_json(const Json& j, const std::string& pointer) {
  const Json& s = require(j, "S", pointer);
  BlockMetabolicForm b;
  b.S = s.is_array() ? form_from_json(Json{{"gram", s}}, child(pointer, "S")) : form_from_json(s, child(pointer, "S"));
  b.A = matrix_from_json(require(j, "A", pointer), child(pointer, "A"));
  b.B = matrix_from_json(require(j, "B", pointer), child(pointer, "B"), b.A.cols());
  if (b.B.rows() == 0 && b.S.dim() == 0) b.B = QMatrix(0, b.A.cols());
  return b;
}

Json block_to_json(const BlockMetabolicForm& b) {
  return Json{{"S", form_to_json(b.S)}, {"A", matrix_to_json(b.A)}, {"B", matrix_to_json(b.B)}};
}

Json metabolic_reduction_to_json(const MetabolicReduction& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"source", s.source}, {"target", s.target}, {"alpha", rational_to_json(s.alpha)}});
  return Json{{"core", form_to_json(r.core)},
              {"hyperbolic_count", r.hyperbolic_count},
              {"steps", std::move(steps)},
              {"congruence", matrix_to_json(r.congruence)}};
}

Json degree_maps_to_json(const DegreeMaps& maps) {
  Json j = Json::object();
  for (const auto& [i, m] : maps) j[std::to_string(i)] = matrix_to_json(m);
  return j;
}

Json complex_to_json(const Complex& c) {
  Json spaces = Json::object();
  for (const auto& [i, n] : c.dims()) spaces[std::to_string(i)] = n;
  return Json{{"spaces", std::move(spaces)}, {"differentials", degree_maps_to_json(c.differentials())}};
}

Complex complex_from_json(const Json& j, const std::string& pointer) {
  const Json& spaces = require(j, "spaces", pointer);
  if (!spaces.is_object()) throw SchemaError(child(pointer, "spaces"), "expected an object keyed by degree");
  std::map<int, std::size_t> dims;
  for (const auto& [key, value] : spaces.items()) {
    const long n = integer_from_json(value, child(child(pointer, "spaces"), key));
    if (n < 0) throw SchemaError(child(child(pointer, "spaces"), key), "dimension must be nonnegative");
    dims[degree_key(key, child(pointer, "spaces"))] = static_cast<std::size_t>(n);
  }
  auto dim = [&](int i) {
    auto it = dims.find(i);
    return it == dims.end() ? std::size_t(0) : it->second;
  };
  DegreeMaps diffs = shaped_maps(optional_field(j, "differentials"), child(pointer, "differentials"),
                                 [&](int i) { return std::make_pair(dim(i + 1), dim(i)); });
  return Complex(std::move(dims), std::move(diffs));
}

Json self_dual_to_json(const SelfDualComplex& c) {
  Json j = complex_to_json(c.complex());
  j["symmetry"] = to_string(c.symmetry());
  j["pairing"] = degree_maps_to_json(c.pairing());
  return j;
}

SelfDualComplex self_dual_from_json(const Json& j, const std::string& pointer) {
  const Complex c = complex_from_json(j, pointer);
  const Symmetry sym = j.contains("symmetry") ? symmetry_from_json(j["symmetry"], child(pointer, "symmetry"))
                                              : Symmetry::symmetric;
  DegreeMaps pairing = shaped_maps(optional_field(j, "pairing"), child(pointer, "pairing"),
                                   [&](int i) { return std::make_pair(c.dim(i), c.dim(-i)); });
  return SelfDualComplex(c, std::move(pairing), sym);
}

Json witness_to_json(const CobordismWitness& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["F"] = self_dual_to_json(w.F);
  j["F_prime"] = self_dual_to_json(w.F_prime);
  j["G"] = complex_to_json(w.G);
  j["G_prime"] = complex_to_json(w.G_prime);
  j["pi"] = degree_maps_to_json(w.pi);
  j["rho"] = degree_maps_to_json(w.rho);
  j["rho_prime"] = degree_maps_to_json(w.rho_prime);
  j["pi_prime"] = degree_maps_to_json(w.pi_prime);
  j["S_pp"] = degree_maps_to_json(w.S_pp);
  if (w.homotopy) j["homotopy"] = degree_maps_to_json(*w.homotopy);
  return j;
}

CobordismWitness witness_from_json(const Json& j, const std::string& pointer) {
  CobordismWitness w;
  const Json& kind = require(j, "kind", pointer);
  if (kind == "direct")
    w.kind = WitnessKind::direct;
  else if (kind == "direct_subquotient")
    w.kind = WitnessKind::direct_subquotient;
  else
    throw SchemaError(child(pointer, "kind"), "kind must be \"direct\" or \"direct_subquotient\"");
  w.F = self_dual_from_json(require(j, "F", pointer), child(pointer, "F"));
  w.F_prime = self_dual_from_json(require(j, "F_prime", pointer), child(pointer, "F_prime"));
  w.G = complex_from_json(require(j, "G", pointer), child(pointer, "G"));
  w.G_prime = complex_from_json(require(j, "G_prime", pointer), child(pointer, "G_prime"));
  const Complex& F = w.F.complex();
  const Complex& Fp = w.F_prime.complex();
  const Complex& G = w.G;
  const Complex& Gp = w.G_prime;
  auto maps = [&](const char* key, const Complex& src, const Complex& dst) {
    return shaped_maps(optional_field(j, key), child(pointer, key),
                       [&](int i) { return std::make_pair(dst.dim(i), src.dim(i)); });
  };
  w.pi = maps("pi", G, F);
  w.rho = maps("rho", F, Gp);
  w.rho_prime = maps("rho_prime", G, Fp);
  w.pi_prime = maps("pi_prime", Fp, Gp);
  w.S_pp = shaped_maps(optional_field(j, "S_pp"), child(pointer, "S_pp"),
                       [&](int i) { return std::make_pair(G.dim(i), Gp.dim(-i)); });
  if (j.contains("homotopy"))
    w.homotopy = shaped_maps(j["homotopy"], child(pointer, "homotopy"),
                             [&](int i) { return std::make_pair(Gp.dim(i - 1), G.dim(i)); });
  return w;
}

Json witness_report_to_json(const WitnessReport& r) {
  Json checks = Json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"ok", ok}});
  Json j{{"ok", r.ok}, {"checks", std::move(checks)}};
  if (!r.ok) j["failure"] = r.failure;
  if (r.cone_sign) j["cone_sign"] = r.cone_sign;
  return j;
}

Json cobordism_class_to_json(const CobordismClass& c) {
  Json j;
  j["symmetry"] = c.skew ? "skew" : "symmetric";
  j["class"] = witt_class_to_json(c.witt);
  if (c.symplectic_certificate) j["symplectic_certificate"] = matrix_to_json(*c.symplectic_certificate);
  return j;
}

Json gaussian_matrix_to_json(const GMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({rational_to_json(m(r, c).re), rational_to_json(m(r, c).im)});
    rows.push_back(std::move(row));
  }
  return rows;
}

Json hodge_to_json(const HodgeStructure& h) {
  Json pieces = Json::array();
  for (const auto& piece : h.pieces) {
    Json basis = Json::array();
    for (std::size_t c = 0; c < piece.basis.cols(); ++c) {
      Json v = Json::array();
      for (std::size_t r = 0; r < piece.basis.rows(); ++r)
        v.push_back({rational_to_json(piece.basis(r, c).re), rational_to_json(piece.basis(r, c).im)});
      basis.push_back(std::move(v));
    }
    pieces.push_back({{"p", piece.p}, {"q", piece.q}, {"basis", std::move(basis)}});
  }
  return Json{{"weight", h.weight}, {"pieces", std::move(pieces)}};
}

HodgeStructure hodge_from_json(const Json& j, const std::string& pointer) {
  HodgeStructure h;
  h.weight = static_cast<int>(integer_from_json(require(j, "weight", pointer), child(pointer, "weight")));
  const Json& pieces = require(j, "pieces", pointer);
  if (!pieces.is_array()) throw SchemaError(child(pointer, "pieces"), "expected an array");
  std::size_t n = 0;
  bool n_known = false;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string at = child(child(pointer, "pieces"), k);
    HodgePiece piece;
    piece.p = static_cast<int>(integer_from_json(require(pieces[k], "p", at), child(at, "p")));
    piece.q = static_cast<int>(integer_from_json(require(pieces[k], "q", at), child(at, "q")));
    const Json& basis = require(pieces[k], "basis", at);
    if (!basis.is_array()) throw SchemaError(child(at, "basis"), "expected an array of vectors");
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const Json& v = basis[c];
      const std::string vat = child(child(at, "basis"), c);
      if (!v.is_array()) throw SchemaError(vat, "expected a vector");
      if (!n_known) {
        n = v.size();
        n_known = true;
      }
      if (v.size() != n) throw SchemaError(vat, "vector length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
    }
    piece.basis = GMatrix(n, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) {
        const Json& e = basis[c][r];
        const std::string eat = child(child(child(at, "basis"), c), r);
        if (e.is_array()) {
          if (e.size() != 2) throw SchemaError(eat, "complex entries are [re, im] pairs");
          piece.basis(r, c) = Gaussian(rational_from_json(e[0], child(eat, 0)), rational_from_json(e[1], child(eat, 1)));
        } else {
          piece.basis(r, c) = Gaussian(rational_from_json(e, eat));
        }
      }
    h.pieces.push_back(std::move(piece));
  }
  for (auto& piece : h.pieces)
    if (piece.basis.cols() == 0) piece.basis = GMatrix(n, 0);
  return h;
}

Json polarization_report_to_json(const PolarizationReport& r) {
  Json j{{"polarization", r.ok}, {"failures", r.failures}};
  if (!r.C.empty()) j["weil_operator"] = matrix_to_json(r.C);
  if (!r.S_C.empty()) j["S_C"] = matrix_to_json(r.S_C);
  return j;
}

Json comparison_to_json(const PolarizationComparison& c) {
  Json j;
  j["phi"] = matrix_to_json(c.phi);
  j["characteristic_polynomial"] = c.characteristic.to_string();
  j["minimal_polynomial"] = c.minimal.to_string();
  j["characteristic_squarefree"] = c.characteristic_squarefree;
  j["semisimple"] = c.minimal_annihilates;
  j["sturm"] = {{"positive_roots", c.sturm.positive_roots}, {"real_roots", c.sturm.real_roots},
                {"all_real", c.sturm.all_real}};
  j["spectrum_positive_real"] = c.spectrum_positive_real;
  j["identity_chain"] = c.identity_chain;
  j["preserves_bigrading"] = c.preserves_bigrading;
  if (c.eigenspaces) {
    Json spaces = Json::array();
    for (const auto& e : *c.eigenspaces)
      spaces.push_back({{"eigenvalue", rational_to_json(e.eigenvalue)}, {"basis", matrix_to_json(e.basis)}});
    j["eigenspaces"] = std::move(spaces);
    j["eigenspaces_orthogonal"] = c.eigenspaces_orthogonal;
  }
  j["signature_S"] = c.signature_S;
  j["signature_S_prime"] = c.signature_S_prime;
  j["real_classes_equal"] = c.holds();
  return j;
}

Json diamond_to_json(const HodgeDiamond& d) { return Json{{"dim", d.n}, {"h", d.h}}; }

HodgeDiamond diamond_from_json(const Json& j, const std::string& pointer) {
  HodgeDiamond d;
  d.n = static_cast<int>(integer_from_json(require(j, "dim", pointer), child(pointer, "dim")));
  const Json& h = require(j, "h", pointer);
  if (!h.is_array()) throw SchemaError(child(pointer, "h"), "expected an array of rows");
  for (std::size_t p = 0; p < h.size(); ++p) {
    if (!h[p].is_array()) throw SchemaError(child(child(pointer, "h"), p), "expected a row");
    std::vector<long> row;
    for (std::size_t q = 0; q < h[p].size(); ++q)
      row.push_back(integer_from_json(h[p][q], child(child(child(pointer, "h"), p), q)));
    d.h.push_back(std::move(row));
  }
  return d;
}

Json y_polynomial_to_json(const YPolynomial& p) { return Json{{"coefficients", p.c}, {"text", p.to_string()}}; }

Json specialization_to_json(const Specialization& s) {
  Json j{{"euler", s.euler}, {"arithmetic_genus", s.arithmetic_genus}, {"even_dimension", s.even_dimension}};
  if (s.even_dimension) j["signature"] = s.signature;
  return j;
}

std::pair<std::vector<PrimitivePiece>, int> pieces_from_json(const Json& j, const std::string& pointer) {
  const int w = static_cast<int>(integer_from_json(require(j, "weight", pointer), child(pointer, "weight")));
  const Json& pieces = require(j, "pieces", pointer);
  if (!pieces.is_array()) throw SchemaError(child(pointer, "pieces"), "expected an array");
  std::vector<PrimitivePiece> out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string at = child(child(pointer, "pieces"), k);
    PrimitivePiece piece;
    piece.j = static_cast<int>(integer_from_json(require(pieces[k], "j", at), child(at, "j")));
    piece.signature = integer_from_json(require(pieces[k], "signature", at), child(at, "signature"));
    out.push_back(piece);
  }
  return {std::move(out), w};
}

Json lefschetz_to_json(const LefschetzCheck& c) {
  auto coeffs = [](const std::map<int, long>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
  };
  return Json{{"lhs", coeffs(c.lhs)},         {"rhs", coeffs(c.rhs)},
              {"converted", coeffs(c.converted)}, {"lhs_value", c.lhs_value},
              {"rhs_value", c.rhs_value},     {"odd_pieces_vanish", c.odd_pieces_vanish},
              {"equal", c.equal}};
}

SurfaceHodgeData surface_from_json(const Json& j, const std::string& pointer) {
  SurfaceHodgeData s;
  s.degree = static_cast<int>(integer_from_json(require(j, "degree", pointer), child(pointer, "degree")));
  s.h11 = integer_from_json(require(j, "h11", pointer), child(pointer, "h11"));
  s.h20 = integer_from_json(require(j, "h20", pointer), child(pointer, "h20"));
  return s;
}

Json isolated_point_to_json(const IsolatedPointReport& r) {
  return Json{{"degree", r.surface.degree},
              {"h11", r.surface.h11},
              {"h20", r.surface.h20},
              {"signature_H2", r.signature_H2},
              {"primitive_dimension", r.primitive_dimension},
              {"primitive_signature", r.primitive_signature},
              {"residual", r.residual},
              {"obstruction", r.obstruction}};
}

Json double_point_to_json(const DoublePointReport& r) {
  return Json{{"canonical", witt_class_to_json(r.canonical)},
              {"induced", witt_class_to_json(r.induced)},
              {"sum", witt_class_to_json(r.sum)},
              {"psi1_at_2", fp_class_to_json(r.psi1_at_2)},
              {"psi0_at_3", fp_class_to_json(r.psi0_at_3)},
              {"nonzero_by_psi1_at_2", r.nonzero_by_psi1_at_2},
              {"nonzero_by_psi0_at_3", r.nonzero_by_psi0_at_3},
              {"nonzero_by_hasse", r.nonzero_by_hasse},
              {"nonvanishing", r.verdict()}};
}

}  // namespace wittcob
