#pragma once

// JSON schemas for every CLI input and output. Rationals are strings ("3/4");
// JSON integers are accepted as shorthand on input.

#include "wittcob/cobordism.hpp"
#include "wittcob/forms.hpp"
#include "wittcob/genus.hpp"
#include "wittcob/hodge.hpp"
#include "wittcob/witt.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace wittcob {

using Json = nlohmann::ordered_json;

/// Input does not match a schema; `pointer` locates the offending value.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& pointer, const std::string& message)
      : std::invalid_argument(pointer + ": " + message), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

Json parse_json_file(const std::string& path);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& pointer = "");

Json matrix_to_json(const QMatrix& m);
/// `rows`/`cols` give the shape of an empty matrix ([] is 0 x cols).
QMatrix matrix_from_json(const Json& j, const std::string& pointer = "", std::size_t empty_cols = 0);

/// {"symmetry": "symmetric"|"skew", "field": "Q"|{"Fp": p}, "gram": [[...]]};
/// "diagonal": [...] may replace "gram". Symmetry defaults to symmetric, field to Q.
Json form_to_json(const BilinearForm& f);
BilinearForm form_from_json(const Json& j, const std::string& pointer = "");

Json invariants_to_json(const FormInvariants& inv);

Json fp_class_to_json(const WittClassFp& c);
WittClassFp fp_class_from_json(const Json& j, const std::string& pointer = "");
/// {"signature": s, "residues": [{"p": "2", ...}]} with primes ascending.
Json witt_class_to_json(const WittClassQ& c);
WittClassQ witt_class_from_json(const Json& j, const std::string& pointer = "");

/// {"S": form, "A": matrix, "B": matrix}.
BlockMetabolicForm block_from_json(const Json& j, const std::string& pointer = "");
Json block_to_json(const BlockMetabolicForm& b);
Json metabolic_reduction_to_json(const MetabolicReduction& r);

Json degree_maps_to_json(const DegreeMaps& maps);
/// {"spaces": {"-1": n, ...}, "differentials": {"-1": [[...]], ...}}.
Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j, const std::string& pointer = "");
/// Complex plus "symmetry" and "pairing".
Json self_dual_to_json(const SelfDualComplex& c);
SelfDualComplex self_dual_from_json(const Json& j, const std::string& pointer = "");

Json witness_to_json(const CobordismWitness& w);
CobordismWitness witness_from_json(const Json& j, const std::string& pointer = "");
Json witness_report_to_json(const WitnessReport& r);
Json cobordism_class_to_json(const CobordismClass& c);

Json gaussian_matrix_to_json(const GMatrix& m);
/// {"weight": w, "pieces": [{"p": .., "q": .., "basis": [vector, ...]}]}; each
/// vector entry is a rational or a [re, im] pair.
Json hodge_to_json(const HodgeStructure& h);
HodgeStructure hodge_from_json(const Json& j, const std::string& pointer = "");
Json polarization_report_to_json(const PolarizationReport& r);
Json comparison_to_json(const PolarizationComparison& c);

/// {"dim": n, "h": [[...]]}.
Json diamond_to_json(const HodgeDiamond& d);
HodgeDiamond diamond_from_json(const Json& j, const std::string& pointer = "");
Json y_polynomial_to_json(const YPolynomial& p);
Json specialization_to_json(const Specialization& s);

/// {"weight": w, "pieces": [{"j": 0, "signature": s}, ...]}.
std::pair<std::vector<PrimitivePiece>, int> pieces_from_json(const Json& j, const std::string& pointer = "");
Json lefschetz_to_json(const LefschetzCheck& c);

/// {"degree": m, "h11": .., "h20": ..}.
SurfaceHodgeData surface_from_json(const Json& j, const std::string& pointer = "");
Json isolated_point_to_json(const IsolatedPointReport& r);
Json double_point_to_json(const DoublePointReport& r);

}  // namespace wittcob
