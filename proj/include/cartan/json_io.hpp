#ifndef CARTAN_JSON_IO_HPP
#define CARTAN_JSON_IO_HPP

#include <json.hpp>

#include "cartan/hss_catalog.hpp"
#include "cartan/matrix_lie.hpp"
#include "cartan/rep_theory.hpp"
#include "cartan/root_system.hpp"
#include "cartan/schubert.hpp"
#include "cartan/verify.hpp"

// JSON shapes consumed by the CLI.  nlohmann::json objects keep keys sorted,
// so the emitted documents are byte-stable for fixed inputs.  Big integers
// are emitted as numbers when they fit in 64 bits and as decimal strings
// otherwise.

namespace cartan {

using json = nlohmann::json;

inline json to_json(const Integer& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

inline json to_json(const RootSystem& rs) {
  json roots = json::array();
  for (const Root& r : rs.positive_roots()) roots.push_back(r.coeffs);
  return json{{"type", to_string(rs.type())},
              {"rank", rs.rank()},
              {"cartan_matrix", rs.cartan()},
              {"positive_roots", roots}};
}

inline json to_json(const RootSystem& rs, const ParabolicSplit& ps) {
  json levi = json::array(), nil = json::array();
  for (const Root& r : ps.levi_positive) levi.push_back(r.coeffs);
  for (const Root& r : ps.nilradical) nil.push_back(r.coeffs);
  return json{{"type", to_string(rs.type())},
              {"rank", rs.rank()},
              {"marked", ps.marked},
              {"levi_positive", levi},
              {"nilradical", nil},
              {"complex_dimension", ps.complex_dimension()}};
}

inline json to_json(const std::vector<IrrepRecord>& records) {
  json out = json::array();
  for (const auto& rec : records)
    out.push_back(json{{"weight", rec.weight.coeffs}, {"dimension", to_json(rec.dimension)}});
  return out;
}

inline json schubert_json(const SchubertIndex& idx) {
  return json{{"index", idx.a},
              {"ambient", json{{"d", idx.d()}, {"n", idx.n}}},
              {"k", schubert_dimension(idx)},
              {"degree", to_json(schubert_degree(idx))},
              {"oracle_degree", to_json(pieri_degree_oracle(idx))}};
}

inline json to_json(const SymmetricPair& pr) {
  json j{{"m_plus", product_label(pr.m_plus)},
         {"m_minus", product_label(pr.m_minus)},
         {"constraint", pr.constraint}};
  if (!pr.remark.empty()) j["remark"] = pr.remark;
  return j;
}

inline json hss_json(const HermitianSpace& s) {
  json params;
  switch (s.kind) {
    case HssKind::AIII: params = json{{"p", s.p}, {"q", s.q}}; break;
    case HssKind::BDI: params = json{{"m", s.m}}; break;
    case HssKind::CI:
    case HssKind::DIII: params = json{{"n", s.n}}; break;
    default: params = json::object();
  }
  PairTable pt = symmetric_pairs(s);
  json pairs = json::array();
  for (const auto& pr : pt.rows) pairs.push_back(to_json(pr));
  return json{{"kind", to_string(s.kind)},
              {"params", params},
              {"dim_C", complex_dimension(s)},
              {"projective_rank", projective_rank(s)},
              {"min_degree", min_degree(s)},
              {"pairs", pairs},
              {"count", pt.count}};
}

inline json to_json(const Gaussian& g) { return json::array({g.re.get_str(), g.im.get_str()}); }

inline json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const CartanPair& cp) {
  json k = json::array(), p = json::array();
  for (const auto& mat : cp.k_basis) k.push_back(to_json(mat));
  for (const auto& mat : cp.p_basis) p.push_back(to_json(mat));
  return json{{"ambient", cp.ambient_label},
              {"k_basis", k},
              {"p_basis", p},
              {"complex_structure", to_json(cp.complex_structure)}};
}

inline json to_json(const verify::VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"id", c.id},
                          {"scope", c.scope},
                          {"claim", c.claim},
                          {"status", c.pass ? "pass" : "fail"},
                          {"detail", c.detail}});
  return json{{"checks", checks},
              {"total", rep.total},
              {"passed", rep.passed},
              {"failed", rep.failed}};
}

inline json to_json(const ConsistencyReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back(
        json{{"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"pass", e.pass}});
  return json{{"entries", entries}, {"notes", rep.notes}, {"violations", rep.violations}};
}

}  // namespace cartan

#endif
