#ifndef RELCALC_IO_HPP
#define RELCALC_IO_HPP

#include <json.hpp>

#include "relcalc/pencil.hpp"
#include "relcalc/perturb.hpp"
#include "relcalc/relation.hpp"

namespace relcalc {

using Json = nlohmann::json;

// Wire formats (JSON, UTF-8):
//   field:        "Q" | "Qi" | {"GF": p}
//   scalar:       string "a/b" or "a/b+c/di" (integers also accepted)
//   matrix file:  {"field": ..., "matrix": [[scalar, ...], ...]}
//   relation:     {"field": ..., "d": int, "pairs": [[2d scalars], ...]}
//   pencil:       {"field": ..., "E": [[...]], "F": [[...]]}
//   rank-one:     {"field": ..., "u": [...], "v": [...], "w": [...]}

FieldTag field_from_json(const Json& j);
Json field_to_json(const FieldTag& tag);

Scalar scalar_from_json(const FieldTag& tag, const Json& j);
Matrix matrix_rows_from_json(const FieldTag& tag, const Json& rows);
Json matrix_rows_to_json(const Matrix& m);
Vec vector_from_json(const FieldTag& tag, const Json& j);
Json vector_to_json(const Vec& v);
Json subspace_to_json(const Subspace& s);

Matrix matrix_from_json(const Json& doc);
LinearRelation relation_from_json(const Json& doc);
Json relation_to_json(const LinearRelation& r);
Pencil pencil_from_json(const Json& doc);
Json pencil_to_json(const Pencil& p);
RankOnePencil rank_one_from_json(const Json& doc);
Json rank_one_to_json(const FieldTag& tag, const RankOnePencil& q);

Eigenvalue eigenvalue_parse(const FieldTag& tag, const std::string& text);  // "inf" or scalar

Json bound_check_to_json(const BoundCheck& c);
Json perturb_report_to_json(const PerturbReport& rep);
Json pencil_report_to_json(const BoundReport& rep);

Json load_json_file(const std::string& path);

}  // namespace relcalc

#endif
