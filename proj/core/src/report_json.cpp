#include "ctx/report_json.hpp"

#include <nlohmann/json.hpp>

namespace ctx {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json audit_json(const ConnectednessAudit& audit) {
  ordered_json out;
  out["consistent"] = audit.consistent;
  out["violations"] = ordered_json::array();
  for (const auto& v : audit.violations)
    out["violations"].push_back({{"content", v.content},
                                 {"context_a", v.context_a},
                                 {"context_b", v.context_b},
                                 {"p_a", v.p_a.to_string()},
                                 {"p_b", v.p_b.to_string()}});
  return out;
}

}  // namespace

std::string to_json(const AnalysisReport& report, bool full_witness) {
  ordered_json doc;
  doc["report_version"] = kReportVersion;
  doc["report"] = "analysis";
  doc["mode"] = to_string(report.mode);
  doc["decision"] = to_string(report.decision);
  doc["audit"] = audit_json(report.audit);
  const auto [rows, cols] = report.lp_shape();
  doc["lp_shape"] = {{"rows", rows}, {"columns", cols}};
  doc["input_digest"] = report.input_digest;

  const auto entries = report.witness_entries();
  ordered_json witness;
  const bool coupling = is_feasible(report.witness);
  witness["kind"] = coupling ? "coupling" : "farkas_certificate";
  witness["verified"] = true;
  witness["support"] = entries.size();
  if (full_witness) {
    if (coupling) {
      ordered_json order = ordered_json::array();
      for (const auto& pair : report.lp.atoms.pairs()) order.push_back(pair.content + "@" + pair.context);
      witness["atom_order"] = std::move(order);
    }
    ordered_json values = ordered_json::object();
    for (const auto& [label, value] : entries) values[label] = value.to_string();
    witness["entries"] = std::move(values);
  }
  doc["witness"] = std::move(witness);
  return finish(doc);
}

std::string to_json(const ChshReport& report) {
  ordered_json doc;
  doc["report_version"] = kReportVersion;
  doc["report"] = "chsh";
  doc["cycle"] = report.cycle;
  ordered_json corr = ordered_json::array();
  for (const auto& e : report.correlations) corr.push_back(e.to_string());
  doc["correlations"] = std::move(corr);
  doc["statistic"] = report.statistic.to_string();
  doc["statistic_max_form"] = report.statistic_max_form.to_string();
  doc["bound"] = "2";
  doc["inequality_holds"] = report.inequality_holds;
  doc["consistency_holds"] = report.consistency_holds;
  doc["decision"] = to_string(report.decision);
  return finish(doc);
}

std::string to_json(const CrossCheckReport& report) {
  ordered_json doc;
  doc["report_version"] = kReportVersion;
  doc["report"] = "crosscheck";
  doc["seed"] = report.seed;
  doc["count"] = report.count;
  doc["shape"] = report.shape.name();
  doc["passed"] = report.passed();

  ordered_json summary;
  summary["solves"] = report.solves;
  summary["witnesses_verified"] = report.witnesses_verified;
  summary["float_marginal"] = report.marginal_count();
  summary["near_boundary_within_1/100"] = report.near_boundary_count(Rational(1, 100));
  std::size_t contextual = 0;
  std::size_t min_only_misses = 0;
  for (const auto& e : report.entries) {
    if (e.exact_cbd == Decision::Contextual) ++contextual;
    if (e.closed_form_min_only && e.exact_traditional && *e.closed_form_min_only != *e.exact_traditional)
      ++min_only_misses;
  }
  summary["contextual"] = contextual;
  summary["noncontextual"] = report.entries.size() - contextual;
  summary["min_form_only_disagreements"] = min_only_misses;
  doc["summary"] = std::move(summary);

  ordered_json dis = ordered_json::array();
  for (const auto& d : report.disagreements)
    dis.push_back({{"index", d.index}, {"kind", d.kind}, {"detail", d.detail}});
  doc["disagreements"] = std::move(dis);

  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json node;
    node["index"] = e.index;
    node["steered"] = e.steered;
    node["exact_cbd"] = to_string(e.exact_cbd);
    node["exact_traditional"] = e.exact_traditional ? ordered_json(to_string(*e.exact_traditional)) : ordered_json();
    node["closed_form"] = e.closed_form ? ordered_json(to_string(*e.closed_form)) : ordered_json();
    node["float"] = to_string(e.float_result.verdict);
    node["float_objective"] = e.float_result.objective;
    node["boundary_distance"] =
        e.boundary_distance ? ordered_json(e.boundary_distance->to_string()) : ordered_json();
    entries.push_back(std::move(node));
  }
  doc["entries"] = std::move(entries);
  return finish(doc);
}

}  // namespace ctx
