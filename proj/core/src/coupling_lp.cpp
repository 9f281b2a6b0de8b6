#include "ctx/coupling_lp.hpp"

#include <algorithm>
#include <sstream>

#include "ctx/error.hpp"

namespace ctx {

namespace {

std::string sign_char(int v) { return v > 0 ? "+1" : "-1"; }

// First membership-pair index of each context.
std::vector<std::size_t> context_offsets(const System& sys) {
  std::vector<std::size_t> offsets;
  std::size_t at = 0;
  for (const auto& block : sys.contexts) {
    offsets.push_back(at);
    at += block.variables.size();
  }
  return offsets;
}

void check_atoms_match(const System& sys, const AtomSpace& atoms) {
  if (atoms.pairs().size() != sys.membership_count())
    throw Error(ErrorKind::Domain, "atom space does not cover the system's membership pairs");
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::Traditional ? "traditional" : "cbd"; }

CouplingAtom AtomSpace::operator[](std::size_t atom) const {
  CouplingAtom out{atom, std::vector<int>(pairs_.size())};
  for (std::size_t p = 0; p < pairs_.size(); ++p) out.values[p] = value(atom, p);
  return out;
}

std::string AtomSpace::label(std::size_t atom) const {
  std::string out(pairs_.size(), '-');
  for (std::size_t p = 0; p < pairs_.size(); ++p)
    if (value(atom, p) > 0) out[p] = '+';
  return out;
}

std::size_t AtomSpace::pair_index(const ContentId& q, const ContextId& c) const {
  for (std::size_t p = 0; p < pairs_.size(); ++p)
    if (pairs_[p].content == q && pairs_[p].context == c) return p;
  throw Error(ErrorKind::Domain, "no membership pair (" + q + ", " + c + ")");
}

std::string to_string(const RowLabel& label) {
  if (const auto* bunch = std::get_if<BunchLabel>(&label))
    return "bunch " + bunch->context + " " + format_assignment(bunch->variables, bunch->assignment);
  const auto& conn = std::get<ConnectionLabel>(label);
  return "connection " + conn.content + " " + conn.context_a + "~" + conn.context_b + " (" +
         sign_char(conn.value_a) + "," + sign_char(conn.value_b) + ")";
}

const Rational& MaximalCouplingTable::cell(int s, int s2) const {
  if (s > 0) return s2 > 0 ? both_plus : plus_minus;
  return s2 > 0 ? minus_plus : both_minus;
}

BoolMatrix LpInstance::matrix() const {
  BoolMatrix m(rows.size(), atoms.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t a = 0; a < rows[r].coefficients.size(); ++a)
      if (rows[r].coefficients[a]) m.set(r, a);
  return m;
}

std::vector<Rational> LpInstance::rhs() const {
  std::vector<Rational> p;
  p.reserve(rows.size());
  for (const auto& row : rows) p.push_back(row.rhs);
  return p;
}

std::string LpInstance::dump() const {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << to_string(row.label) << " : " << row.rhs << " :";
    for (std::size_t a = 0; a < row.coefficients.size(); ++a)
      if (row.coefficients[a]) os << ' ' << a;
    os << '\n';
  }
  return os.str();
}

AtomSpace enumerate_atoms(const System& sys, int cap_exponent) {
  const std::size_t m = sys.membership_count();
  if (cap_exponent < 0 || m > static_cast<std::size_t>(cap_exponent) || m >= 63)
    throw Error(ErrorKind::SizeCap, "system too large: m = " + std::to_string(m) +
                                        " membership pairs exceeds the cap of 2^" + std::to_string(cap_exponent) +
                                        " atoms");
  std::vector<MembershipPair> pairs;
  pairs.reserve(m);
  for (const auto& block : sys.contexts)
    for (const auto& q : block.variables) pairs.push_back({q, block.id});
  return AtomSpace(std::move(pairs));
}

std::vector<ConstraintRow> bunch_constraints(const System& sys, const AtomSpace& atoms) {
  check_atoms_match(sys, atoms);
  const auto offsets = context_offsets(sys);
  std::vector<ConstraintRow> rows;
  for (std::size_t ci = 0; ci < sys.contexts.size(); ++ci) {
    const auto& block = sys.contexts[ci];
    const std::size_t k = block.variables.size();
    const std::size_t first_row = rows.size();
    for (std::size_t index = 0; index < assignment_count(k); ++index)
      rows.push_back({BunchLabel{block.id, block.variables, index}, std::vector<bool>(atoms.size(), false),
                      block.joint.at(index)});
    // Each atom restricts to exactly one assignment of this context.
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      std::size_t local = 0;
      for (std::size_t j = 0; j < k; ++j) local = (local << 1) | (atoms.value(a, offsets[ci] + j) < 0 ? 1U : 0U);
      rows[first_row + local].coefficients[a] = true;
    }
  }
  return rows;
}

std::vector<ConstraintRow> bunch_constraints(const System& sys) { return bunch_constraints(sys, enumerate_atoms(sys)); }

MaximalCouplingTable maximal_coupling_pair(const Rational& p, const Rational& p2) {
  MaximalCouplingTable t;
  t.p_first = p;
  t.p_second = p2;
  t.p_low = min(p, p2);
  t.p_high = max(p, p2);
  t.both_plus = t.p_low;
  t.both_minus = Rational(1) - t.p_high;
  t.plus_minus = p - t.p_low;
  t.minus_plus = p2 - t.p_low;
  return t;
}

std::vector<ConstraintRow> connection_constraints(const System& sys, Mode mode, const AtomSpace& atoms) {
  check_atoms_match(sys, atoms);
  if (mode == Mode::Traditional) {
    const auto audit = audit_connectedness(sys);
    if (!audit.consistent) {
      const auto& v = audit.violations.front();
      throw Error(ErrorKind::ModeMismatch,
                  "traditional mode requires a consistently connected system, but content \"" + v.content +
                      "\" has Pr[+1] = " + v.p_a.to_string() + " in context \"" + v.context_a + "\" and " +
                      v.p_b.to_string() + " in context \"" + v.context_b + "\" (" +
                      std::to_string(audit.violations.size()) + " violation(s)); use CbD mode");
    }
  }

  std::vector<ConstraintRow> rows;
  constexpr int kValues[2] = {1, -1};
  for (const auto& conn : connections(sys)) {
    for (std::size_t i = 0; i < conn.contexts.size(); ++i) {
      for (std::size_t j = i + 1; j < conn.contexts.size(); ++j) {
        const auto& ca = conn.contexts[i];
        const auto& cb = conn.contexts[j];
        const std::size_t pa = atoms.pair_index(conn.content, ca);
        const std::size_t pb = atoms.pair_index(conn.content, cb);
        const Rational p = marginal_one(sys, conn.content, ca);
        const auto table = maximal_coupling_pair(p, marginal_one(sys, conn.content, cb));

        for (int s : kValues) {
          for (int s2 : kValues) {
            Rational rhs;
            if (mode == Mode::CbD)
              rhs = table.cell(s, s2);
            else if (s == s2)
              rhs = s > 0 ? p : Rational(1) - p;
            ConstraintRow row{ConnectionLabel{conn.content, ca, cb, s, s2}, std::vector<bool>(atoms.size(), false),
                              rhs};
            for (std::size_t a = 0; a < atoms.size(); ++a)
              row.coefficients[a] = atoms.value(a, pa) == s && atoms.value(a, pb) == s2;
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

std::vector<ConstraintRow> connection_constraints(const System& sys, Mode mode) {
  return connection_constraints(sys, mode, enumerate_atoms(sys));
}

LpInstance build_lp(const System& sys, Mode mode, int cap_exponent) {
  LpInstance lp;
  lp.mode = mode;
  lp.atoms = enumerate_atoms(sys, cap_exponent);
  lp.rows = bunch_constraints(sys, lp.atoms);
  auto conn = connection_constraints(sys, mode, lp.atoms);
  std::ranges::move(conn, std::back_inserter(lp.rows));
  return lp;
}

}  // namespace ctx
