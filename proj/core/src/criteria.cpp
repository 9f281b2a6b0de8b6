#include "ctx/criteria.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "ctx/error.hpp"
#include "ctx/system_io.hpp"

namespace ctx {

std::string to_string(Decision d) { return d == Decision::Contextual ? "contextual" : "noncontextual"; }

std::vector<std::pair<std::string, Rational>> AnalysisReport::witness_entries() const {
  std::vector<std::pair<std::string, Rational>> out;
  if (const auto* f = std::get_if<Feasible>(&witness)) {
    for (std::size_t a = 0; a < f->x.size(); ++a)
      if (!f->x[a].is_zero()) out.emplace_back(lp.atoms.label(a), f->x[a]);
  } else {
    const auto& y = std::get<Infeasible>(witness).y;
    for (std::size_t r = 0; r < y.size(); ++r)
      if (!y[r].is_zero()) out.emplace_back(to_string(lp.rows[r].label), y[r]);
  }
  return out;
}

std::string input_digest(const System& sys) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_system(sys)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool same_constraints(const LpInstance& a, const LpInstance& b) { return a.atoms == b.atoms && a.rows == b.rows; }

AnalysisReport analyze(const System& sys, Mode mode, const AnalysisOptions& options) {
  if (auto violations = validate(sys); !violations.empty()) {
    std::string msg = "invalid system:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw Error(ErrorKind::Invalid, msg);
  }

  AnalysisReport report;
  report.mode = mode;
  report.audit = audit_connectedness(sys);
  report.lp = build_lp(sys, mode, options.size_cap_exponent);
  report.input_digest = input_digest(sys);

  const BoolMatrix m = report.lp.matrix();
  const std::vector<Rational> p = report.lp.rhs();
  report.witness = solve_feasibility(m, p);
  if (!verify_result(m, p, report.witness))
    throw Error(ErrorKind::Domain, "solver witness failed independent verification (internal error)");
  report.decision = is_feasible(report.witness) ? Decision::Noncontextual : Decision::Contextual;
  return report;
}

ChshReport chsh_criterion(const System& sys) {
  const auto not_cyclic = [](const std::string& why) {
    return Error(ErrorKind::ShapeMismatch, "not a rank-4 cyclic system: " + why);
  };
  if (auto violations = validate(sys); !violations.empty())
    throw Error(ErrorKind::Invalid, "invalid system: " + violations.front());
  if (sys.contexts.size() != 4) throw not_cyclic(std::to_string(sys.contexts.size()) + " contexts");
  std::map<ContentId, std::vector<std::size_t>> incidence;
  for (std::size_t c = 0; c < 4; ++c) {
    const auto& block = sys.contexts[c];
    if (block.variables.size() != 2) throw not_cyclic("context \"" + block.id + "\" does not have two variables");
    for (const auto& q : block.variables) incidence[q].push_back(c);
  }
  if (incidence.size() != 4) throw not_cyclic(std::to_string(incidence.size()) + " contents in use");
  for (const auto& [q, where] : incidence)
    if (where.size() != 2) throw not_cyclic("content \"" + q + "\" is in " + std::to_string(where.size()) + " contexts");

  // Walk the cycle from the first context, leaving through its second variable.
  ChshReport report;
  std::size_t current = 0;
  ContentId exit = sys.contexts[0].variables[1];
  std::set<std::size_t> visited;
  for (std::size_t step = 0; step < 4; ++step) {
    if (!visited.insert(current).second) throw not_cyclic("contexts form more than one cycle");
    const auto& block = sys.contexts[current];
    report.cycle[step] = block.id;
    report.correlations[step] = pairwise_moment(sys, block.id, block.variables[0], block.variables[1]);
    const auto& pair = incidence.at(exit);
    const std::size_t next = pair[0] == current ? pair[1] : pair[0];
    const auto& next_vars = sys.contexts[next].variables;
    exit = next_vars[0] == exit ? next_vars[1] : next_vars[0];
    current = next;
  }
  if (current != 0) throw not_cyclic("contexts do not close into one cycle");

  Rational sum;
  Rational lo = report.correlations[0];
  Rational hi = report.correlations[0];
  for (const auto& e : report.correlations) {
    sum += e;
    lo = min(lo, e);
    hi = max(hi, e);
  }
  report.statistic = (sum - Rational(2) * lo).abs();
  report.statistic_max_form = (sum - Rational(2) * hi).abs();
  report.inequality_holds = report.statistic <= Rational(2) && report.statistic_max_form <= Rational(2);

  report.consistency_holds = true;
  for (const auto& [q, where] : incidence)
    if (marginal_one(sys, q, sys.contexts[where[0]].id) != marginal_one(sys, q, sys.contexts[where[1]].id))
      report.consistency_holds = false;

  report.decision = report.inequality_holds && report.consistency_holds ? Decision::Noncontextual
                                                                        : Decision::Contextual;
  return report;
}

bool specialization_check(const System& sys, const AnalysisOptions& options) {
  const auto audit = audit_connectedness(sys);
  if (!audit.consistent)
    throw Error(ErrorKind::ModeMismatch, "specialization check needs a consistently connected system");
  const auto traditional = analyze(sys, Mode::Traditional, options);
  const auto cbd = analyze(sys, Mode::CbD, options);
  return same_constraints(traditional.lp, cbd.lp) && traditional.decision == cbd.decision;
}

}  // namespace ctx
