#pragma once

#include <string>

#include <json.hpp>

#include "repkit/catalog.hpp"
#include "repkit/homological.hpp"
#include "repkit/scheme.hpp"
#include "repkit/tubes.hpp"

namespace repkit {

/// Insertion-ordered so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
const Field& field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
/// Accepts the serialized string form or a JSON integer.
Scalar scalar_from_json(const Field& f, const Json& j);

Json mat_to_json(const Mat& m);
/// rows/cols are needed only to give empty matrices a shape.
Mat mat_from_json(const Field& f, const Json& j, std::size_t rows = 0, std::size_t cols = 0);
Json column_to_json(const Mat& v);
Mat column_from_json(const Field& f, const Json& j);

Json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const Field& f, const Json& j);

Json ncpoly_to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const Field& f, const Json& j);

Json algebra_to_json(const Algebra& a);
/// `field_override` replaces the document's field when given.
AlgebraPtr algebra_from_json(const Json& j, const Field* field_override = nullptr);

Json module_to_json(const ModuleRep& x);
/// The algebra is taken from the document's "algebra" member when present,
/// otherwise from `algebra`.
ModuleRep module_from_json(const Json& j, const AlgebraPtr& algebra = nullptr, const Field* field_override = nullptr);

Json family_to_json(const BimoduleFamily& fam);
BimoduleFamily family_from_json(const Json& j, const Field* field_override = nullptr);

Json ses_to_json(const SesData& s);
SesData ses_from_json(const Json& j, const AlgebraPtr& algebra = nullptr, const Field* field_override = nullptr);

Json presentation_to_json(const PresentationMorphism& pm);
PresentationMorphism presentation_from_json(const Json& j, const AlgebraPtr& algebra = nullptr,
                                            const Field* field_override = nullptr);

Json validation_to_json(const ValidationReport& r);
Json family_validation_to_json(const FamilyReport& r);
/// Summands with isomorphism-class labels (first occurrence numbering).
Json decomposition_to_json(const Decomposition& d, std::uint64_t seed);
Json scheme_to_json(const SchemeEquations& eqs);
Json bt1_to_json(const Bt1Report& r);
std::string bt1_to_csv(const Bt1Report& r);
Json harada_sai_to_json(const HaradaSaiReport& r);
Json error_to_json(const Error& e);

Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace repkit
