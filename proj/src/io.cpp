#include "relcalc/io.hpp"

#include <fstream>

namespace relcalc {

FieldTag field_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return FieldTag::rationals();
    if (s == "Qi") return FieldTag::gaussian_rationals();
    throw ParseError("unknown field '" + s + "'");
  }
  if (j.is_object() && j.contains("GF"))
    return FieldTag::prime_field(j.at("GF").get<unsigned>());
  throw ParseError("field must be \"Q\", \"Qi\" or {\"GF\": p}");
}

Json field_to_json(const FieldTag& tag) {
  switch (tag.kind) {
    case FieldKind::Q: return Json("Q");
    case FieldKind::Qi: return Json("Qi");
    case FieldKind::GFp: return Json{{"GF", tag.p}};
  }
  throw ParseError("bad field tag");
}

Scalar scalar_from_json(const FieldTag& tag, const Json& j) {
  if (j.is_number_integer()) return Scalar::from_int(tag, j.get<long>());
  if (j.is_string()) return Scalar::parse(tag, j.get<std::string>());
  throw ParseError("scalar entries must be strings or integers");
}

Matrix matrix_rows_from_json(const FieldTag& tag, const Json& rows) {
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t r = rows.size();
  std::size_t c = 0;
  if (r > 0) {
    if (!rows[0].is_array()) throw ParseError("matrix rows must be arrays");
    c = rows[0].size();
  }
  Matrix m(tag, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c)
      throw ParseError("ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) m.at(i, k) = scalar_from_json(tag, rows[i][k]);
  }
  return m;
}

Json matrix_rows_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Vec vector_from_json(const FieldTag& tag, const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(scalar_from_json(tag, e));
  return v;
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient()}, {"dim", s.dim()},
              {"basis", matrix_rows_to_json(s.basis())}};
}

Matrix matrix_from_json(const Json& doc) {
  FieldTag tag = field_from_json(doc.at("field"));
  return matrix_rows_from_json(tag, doc.at("matrix"));
}

LinearRelation relation_from_json(const Json& doc) {
  FieldTag tag = field_from_json(doc.at("field"));
  std::size_t d = doc.at("d").get<std::size_t>();
  std::vector<Vec> pairs;
  for (const auto& row : doc.at("pairs")) {
    Vec p = vector_from_json(tag, row);
    if (p.size() != 2 * d) throw ParseError("relation pair length must be 2d");
    pairs.push_back(std::move(p));
  }
  return LinearRelation::from_pairs(tag, d, pairs);
}

Json relation_to_json(const LinearRelation& r) {
  return Json{{"field", field_to_json(r.tag())},
              {"d", r.d()},
              {"pairs", matrix_rows_to_json(r.space().basis())}};
}

Pencil pencil_from_json(const Json& doc) {
  FieldTag tag = field_from_json(doc.at("field"));
  return Pencil(matrix_rows_from_json(tag, doc.at("E")),
                matrix_rows_from_json(tag, doc.at("F")));
}

Json pencil_to_json(const Pencil& p) {
  return Json{{"field", field_to_json(p.tag())},
              {"E", matrix_rows_to_json(p.E)},
              {"F", matrix_rows_to_json(p.F)}};
}

RankOnePencil rank_one_from_json(const Json& doc) {
  FieldTag tag = field_from_json(doc.at("field"));
  return RankOnePencil(vector_from_json(tag, doc.at("u")),
                       vector_from_json(tag, doc.at("v")),
                       vector_from_json(tag, doc.at("w")));
}

Json rank_one_to_json(const FieldTag& tag, const RankOnePencil& q) {
  return Json{{"field", field_to_json(tag)},
              {"u", vector_to_json(q.u)},
              {"v", vector_to_json(q.v)},
              {"w", vector_to_json(q.w)}};
}

Eigenvalue eigenvalue_parse(const FieldTag& tag, const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo")
    return Eigenvalue::infinity();
  return Eigenvalue::of(Scalar::parse(tag, text));
}

Json bound_check_to_json(const BoundCheck& c) {
  return Json{{"rule", c.rule}, {"n", c.n},     {"lo", c.lo},
              {"hi", c.hi},     {"value", c.value}, {"pass", c.pass}};
}

Json perturb_report_to_json(const PerturbReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(bound_check_to_json(c));
  return Json{{"order", rep.order},
              {"nested", rep.nested},
              {"s_ab", rep.s_ab},
              {"s_ba", rep.s_ba},
              {"s_bracket", rep.s_bracket},
              {"D_a", rep.d_a},
              {"D_b", rep.d_b},
              {"ker_a", rep.ker_a},
              {"ker_b", rep.ker_b},
              {"singular_chains_a", rep.singular_chains_a},
              {"singular_chains_b", rep.singular_chains_b},
              {"checks", std::move(checks)},
              {"pass", rep.pass()}};
}

Json pencil_report_to_json(const BoundReport& rep) {
  Json lambdas = Json::array();
  for (const auto& lc : rep.lambdas) {
    Json checks = Json::array();
    for (const auto& c : lc.checks) checks.push_back(bound_check_to_json(c));
    lambdas.push_back(Json{{"lambda", lc.lambda.str()},
                           {"D_base", lc.d_base},
                           {"D_pert", lc.d_pert},
                           {"s_base_pert", lc.s_base_pert},
                           {"s_pert_base", lc.s_pert_base},
                           {"checks", std::move(checks)}});
  }
  Json wong_checks = Json::array();
  for (const auto& c : rep.wong_checks) wong_checks.push_back(bound_check_to_json(c));
  return Json{{"case", rep.case_name},
              {"regular_base", rep.regular_base},
              {"regular_pert", rep.regular_pert},
              {"inclusion", rep.inclusion},
              {"inclusion_relation_verified", rep.inclusion_relation_verified},
              {"relation_order", rep.relation_order},
              {"dual_relation_order", rep.dual_relation_order},
              {"untested_spectrum", rep.untested_spectrum},
              {"lambdas", std::move(lambdas)},
              {"wong_q_base", rep.wong_q_base},
              {"wong_q_pert", rep.wong_q_pert},
              {"wong_checks", std::move(wong_checks)},
              {"pass", rep.pass()}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace relcalc
