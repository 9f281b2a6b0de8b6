#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ctx/coupling_lp.hpp"
#include "ctx/rational.hpp"
#include "ctx/rational_lp.hpp"
#include "ctx/system.hpp"

namespace ctx {

enum class Decision { Contextual, Noncontextual };

std::string to_string(Decision d);

struct AnalysisOptions {
  int size_cap_exponent = kDefaultSizeCapExponent;
};

struct AnalysisReport {
  Mode mode = Mode::CbD;
  Decision decision = Decision::Contextual;
  ConnectednessAudit audit;
  LpInstance lp;
  /// Raw witness, indexed by atom (Feasible) or by row (Infeasible). It has
  /// already passed verify_solution / verify_certificate.
  FeasibilityResult witness;
  std::string input_digest;

  std::pair<std::size_t, std::size_t> lp_shape() const { return {lp.row_count(), lp.column_count()}; }
  /// Nonzero witness entries keyed by atom label or row label.
  std::vector<std::pair<std::string, Rational>> witness_entries() const;
};

/// Decides (non)contextuality by LP feasibility and embeds the checked
/// witness. Throws Error{Invalid} for a system failing validate(),
/// Error{ModeMismatch} for traditional mode on an inconsistently connected
/// system, and Error{SizeCap} when the coupling is too large.
AnalysisReport analyze(const System& sys, Mode mode, const AnalysisOptions& options = {});

/// Closed-form check for the rank-4 cyclic (CHSH) arrangement.
struct ChshReport {
  std::array<ContextId, 4> cycle;        // contexts in cycle order
  std::array<Rational, 4> correlations;  // <R_q^c R_q'^c> per context of `cycle`
  Rational statistic;                    // |sum - 2 min|
  Rational statistic_max_form;           // |sum - 2 max|
  bool inequality_holds = false;         // both statistics <= 2
  bool consistency_holds = false;
  Decision decision = Decision::Contextual;
};

/// Throws Error{ShapeMismatch} unless the system is 4 two-variable contexts
/// over 4 contents arranged in one cycle.
ChshReport chsh_criterion(const System& sys);

/// True iff both modes build identical constraints and reach the same
/// decision. Throws Error{ModeMismatch} on an inconsistently connected system.
bool specialization_check(const System& sys, const AnalysisOptions& options = {});

/// "fnv1a64:<16 hex digits>" of the canonical serialization.
std::string input_digest(const System& sys);

/// Same atoms, rows, and right-hand sides (mode tag ignored).
bool same_constraints(const LpInstance& a, const LpInstance& b);

}  // namespace ctx
