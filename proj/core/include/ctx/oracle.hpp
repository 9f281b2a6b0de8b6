#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctx/bool_matrix.hpp"
#include "ctx/criteria.hpp"
#include "ctx/rational.hpp"
#include "ctx/system.hpp"

namespace ctx {

enum class FloatVerdict { Feasible, Infeasible, Marginal };

std::string to_string(FloatVerdict v);

struct FloatFeasibility {
  FloatVerdict verdict = FloatVerdict::Marginal;
  double objective = 0.0;  // phase-1 optimum (sum of artificials)
};

inline constexpr double kDefaultOracleTolerance = 1e-9;

/// Double-precision phase-1 simplex, independent of the exact solver.
/// objective <= tolerance/1000 -> Feasible, objective > tolerance ->
/// Infeasible, anything between -> Marginal.
FloatFeasibility float_feasibility(const BoolMatrix& m, std::span<const Rational> p,
                                   double tolerance = kDefaultOracleTolerance);

struct CorpusShape {
  int rank = 4;
  bool consistent = true;

  /// "rank4-consistent", "rank2-inconsistent", ...
  static CorpusShape parse(const std::string& text);
  std::string name() const;
};

/// Corpus member `index`: a seeded random_system; every tenth consistent
/// member is steered to the noncontextuality boundary.
System corpus_system(std::uint64_t seed, std::size_t index, const CorpusShape& shape);
bool corpus_member_steered(std::size_t index, const CorpusShape& shape);

struct CrossCheckEntry {
  std::size_t index = 0;
  bool steered = false;
  Decision exact_cbd = Decision::Contextual;
  std::optional<Decision> exact_traditional;
  std::optional<Decision> closed_form;
  /// Decision of the min-subtraction statistic alone (rank 4 only).
  std::optional<Decision> closed_form_min_only;
  FloatFeasibility float_result;
  /// |odd-flip statistic - (rank - 2)| for consistent cyclic members.
  std::optional<Rational> boundary_distance;
  bool lp_identical_across_modes = true;
};

struct Disagreement {
  std::size_t index = 0;
  std::string kind;
  std::string detail;
};

struct CrossCheckReport {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  CorpusShape shape;
  std::vector<CrossCheckEntry> entries;  // keyed by corpus index
  std::vector<Disagreement> disagreements;
  std::size_t witnesses_verified = 0;
  std::size_t solves = 0;

  /// No exact-vs-closed-form, exact-vs-float (outside Marginal), or
  /// traditional-vs-CbD disagreements.
  bool passed() const { return disagreements.empty(); }
  std::size_t near_boundary_count(const Rational& band) const;
  std::size_t marginal_count() const;
};

CrossCheckReport run_corpus(std::uint64_t seed, std::size_t count, const CorpusShape& shape, unsigned threads = 0);

/// Odd-flip cyclic statistic max over odd sign flips of sum(+-e_i); for a
/// consistently connected rank-n cyclic system it is noncontextual iff this
/// is <= n - 2.
Rational odd_flip_statistic(std::span<const Rational> correlations);

}  // namespace ctx
