#include "wonder/report.hpp"

namespace wonder {

Json json_of(const Rational& value) { return format_rational(value); }

Json json_of(const QVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(format_rational(c));
  return out;
}

Json json_of(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_of(m.row(i)));
  return out;
}

Json json_of(const Subspace& s) {
  Json out;
  out["dim"] = s.dim();
  out["basis"] = json_of(s.basis());
  if (!s.is_full() && !s.is_zero())
    if (auto pi = braid_space_partition(s)) out["partition"] = pi->display();
  return out;
}

Json json_of(const IntersectionLattice& lattice) {
  Json out;
  out["ambient_dim"] = lattice.ambient_dim();
  out["element_count"] = lattice.size();
  Json elems = Json::array();
  for (const Subspace& e : lattice.elements()) elems.push_back(json_of(e));
  out["elements"] = elems;
  Json pairs = Json::array();
  for (auto [i, j] : lattice.order_pairs()) pairs.push_back(Json::array({i, j}));
  out["order_pairs"] = pairs;
  return out;
}

Json json_of(const ModelPoint& omega) {
  Json out;
  out["x"] = json_of(omega.point);
  Json lines = Json::array();
  for (const Subspace& line : omega.lines) lines.push_back(json_of(line.line_generator()));
  out["lines"] = lines;
  Json chain = Json::array();
  for (const Subspace& h : omega.chain) chain.push_back(json_of(h));
  out["chain"] = chain;
  return out;
}

Json json_of(const StratumCertificate& cert) {
  Json out;
  Json chain = Json::array();
  for (const Subspace& h : cert.chain) chain.push_back(json_of(h));
  out["chain"] = chain;
  out["sample"] = json_of(cert.sample);
  out["stabilizer_order"] = cert.stabilizer_order;
  out["elementary_abelian_2"] = cert.elementary_abelian_2;
  out["invariant_span_full"] = cert.invariant_span_full;
  out["ok"] = cert.passed();
  return out;
}

Json json_of(const DigitalizationReport& report) {
  Json out;
  out["degree"] = report.degree;
  out["group_order"] = report.group_order;
  out["arrangement_size"] = report.arrangement_size;
  out["lattice_size"] = report.lattice_size;
  out["samples_per_chain"] = report.samples_per_chain;
  out["seed"] = report.seed;
  Json strata = Json::array();
  for (const auto& cert : report.strata) strata.push_back(json_of(cert));
  out["strata"] = strata;
  out["verdict"] = report.verdict ? "pass" : "fail";
  return out;
}

Json json_of(const FixedComponent& comp) {
  Json out;
  out["multi_carrier"] = comp.multi_carrier();
  Json carriers = Json::array();
  for (const Subspace& c : comp.carriers) carriers.push_back(json_of(c));
  out["carriers"] = carriers;
  return out;
}

Json json_of(const ProjectiveStratificationReport& report) {
  Json out;
  out["n"] = report.n;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json row;
    row["partition"] = w.partition;
    row["rank"] = w.expected_rank;
    row["ok"] = w.ok;
    witnesses.push_back(row);
  }
  out["witnesses"] = witnesses;
  Json census = Json::array();
  for (const auto& rec : report.census) {
    Json row;
    row["subgroup_order"] = rec.subgroup_order;
    row["component"] = json_of(rec.component);
    row["base_point"] = json_of(rec.base_point);
    row["stratum"] = json_of(rec.stratum);
    row["classification"] = rec.whole_space     ? "whole_space"
                            : rec.is_braid_space ? "braid_space"
                                                 : "unexpected";
    if (rec.is_braid_space) row["partition"] = rec.partition;
    census.push_back(row);
  }
  out["census"] = census;
  Json carriers = Json::array();
  for (const Subspace& c : report.nontrivial_carriers) carriers.push_back(json_of(c));
  out["nontrivial_stratum_carriers"] = carriers;
  Json expected = Json::array();
  for (const Subspace& c : report.expected_carriers) expected.push_back(json_of(c));
  out["rank2_truncation_subspaces"] = expected;
  out["realization_ok"] = report.realization_ok;
  out["classification_ok"] = report.classification_ok;
  out["carrier_sets_equal"] = report.carriers_match;
  out["verdict"] = report.verdict ? "pass" : "fail";
  return out;
}

std::string describe_subspace(const Subspace& s) {
  if (s.is_full()) return "R^" + std::to_string(s.ambient_dim());
  if (s.is_zero()) return "0";
  if (auto pi = braid_space_partition(s)) return "U_" + pi->display();
  std::string out = "span{";
  for (std::size_t i = 0; i < s.basis().rows(); ++i) {
    if (i) out += ", ";
    out += format_vector(s.basis().row(i));
  }
  return out + "}";
}

std::string describe_chain(const std::vector<Subspace>& chain) {
  if (chain.empty()) return "(complement)";
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " < ";
    out += describe_subspace(chain[i]);
  }
  return out;
}

}  // namespace wonder
