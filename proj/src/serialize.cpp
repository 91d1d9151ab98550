#include "huckel/serialize.hpp"

namespace huckel {

namespace {

std::vector<Var> layout(int varcount) {
  std::vector<Var> vars;
  for (int i = varcount - 1; i >= 0; --i) vars.push_back(Var::x(i));
  for (int i = varcount - 1; i >= 0; --i) vars.push_back(Var::y(i));
  vars.push_back(Var::z());
  return vars;
}

}  // namespace

Json poly_terms_json(const MultiPoly& p) {
  const auto vars = layout(p.varcount());
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exp = Json::array();
    for (const auto& v : vars) exp.push_back(t.mono.exponent(v));
    terms.push_back({{"exp", exp}, {"coef", t.coef.str()}});
  }
  return terms;
}

Json poly_json(const MultiPoly& p) {
  return {{"text", p.to_string()}, {"varcount", p.varcount()}, {"terms", poly_terms_json(p)}};
}

MultiPoly poly_from_json(const Json& j) {
  const int vc = j.at("varcount").get<int>();
  const auto vars = layout(vc);
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& exp = t.at("exp");
    if (exp.size() != vars.size()) throw Error(Errc::Parse, "exponent vector has the wrong length");
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i) m.set(vars[i], exp[i].get<std::uint16_t>());
    terms.push_back({m, parse_bigint(t.at("coef").get<std::string>())});
  }
  return MultiPoly::from_terms(std::move(terms), vc);
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"entries", rows}};
}

Json cyc_json(const CycInt& v) {
  Json coords = Json::array();
  for (const auto& c : v.coords()) coords.push_back(c.str());
  return {{"text", v.to_string()}, {"coords", coords}};
}

Json gauss_json(const GaussInt& v) {
  return {{"text", v.to_string()}, {"re", v.re().str()}, {"im", v.im().str()}};
}

}  // namespace huckel
