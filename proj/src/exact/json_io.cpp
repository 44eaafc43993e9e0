#include "slodowy/exact/json_io.hpp"

namespace slodowy::exact {

Scalar scalar_from_string(const std::string& s) {
  auto c = MPoly::parse(s).as_constant();
  if (!c) throw InputError("not a scalar: " + s);
  return *c;
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coef", rational_string(c.rational_part())},
                     {"coef_sqrt2", rational_string(c.sqrt2_part())},
                     {"exps", e}});
  }
  return {{"vars", p.vars()}, {"terms", terms}};
}

MPoly mpoly_from_json(const json& j) {
  VarListPtr env = make_env(j.at("vars").get<VarList>());
  MPoly::TermMap terms;
  for (const auto& t : j.at("terms")) {
    mpq_class r(t.at("coef").get<std::string>());
    mpq_class s(t.value("coef_sqrt2", std::string("0")));
    r.canonicalize();
    s.canonicalize();
    auto e = t.at("exps").get<Exponents>();
    terms[e] += Scalar(r, s);
  }
  return MPoly::from_terms(env, std::move(terms));
}

json to_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

ScalarMatrix matrix_from_json(const json& j) {
  std::size_t r = j.size();
  std::size_t c = r ? j[0].size() : 0;
  ScalarMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (j[i].size() != c) throw DimensionError("ragged matrix in JSON");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_string(j[i][k].get<std::string>());
  }
  return m;
}

}  // namespace slodowy::exact
