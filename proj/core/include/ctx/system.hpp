#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctx/rational.hpp"

namespace ctx {

using ContentId = std::string;
using ContextId = std::string;

// Full ±1 assignments over k variables are indexed 0 .. 2^k-1 in
// lexicographic order with +1 before -1: bit (k-1-j) of the index is set
// iff variable j takes -1. Index 0 is the all-(+1) assignment.
std::size_t assignment_count(std::size_t k);
int assignment_value(std::size_t index, std::size_t k, std::size_t j);
std::size_t assignment_index(std::span<const int> values);
std::vector<int> assignment_values(std::size_t index, std::size_t k);
/// "(q1=+1,q2=-1)"
std::string format_assignment(std::span<const ContentId> variables, std::size_t index);

/// One context and the joint distribution of the variables measured in it.
struct ContextBlock {
  ContextId id;
  std::vector<ContentId> variables;
  /// Dense, indexed by assignment_index over `variables`. Absent mass is 0.
  std::vector<Rational> joint;

  std::optional<std::size_t> position_of(const ContentId& q) const;

  friend bool operator==(const ContextBlock&, const ContextBlock&) = default;
};

struct System {
  std::vector<ContentId> contents;
  std::vector<ContextBlock> contexts;

  const ContextBlock* find_context(const ContextId& c) const;
  std::size_t membership_count() const;

  friend bool operator==(const System&, const System&) = default;
};

struct Connection {
  ContentId content;
  std::vector<ContextId> contexts;
};

struct ConnectednessViolation {
  ContentId content;
  ContextId context_a;
  ContextId context_b;
  Rational p_a;  // Pr[R_q^a = +1]
  Rational p_b;  // Pr[R_q^b = +1]
};

struct ConnectednessAudit {
  bool consistent = true;
  std::vector<ConnectednessViolation> violations;
};

/// Moments of one two-variable context: <A>, <B>, <AB>.
struct PairMoments {
  Rational mean_first;
  Rational mean_second;
  Rational product;
};

struct PairLayout {
  ContextId context;
  ContentId first;
  ContentId second;
};

using MomentSpec = std::vector<PairMoments>;

/// Rank-n cyclic arrangement: n contents, n two-variable contexts, context i
/// measuring (q_i, q_{i+1 mod n}), so content i is shared by contexts i-1 and i.
struct CyclicShape {
  int rank = 4;
  /// Steer the correlations so that the odd-flip statistic lands within
  /// 1/100 of its noncontextuality bound (rank - 2).
  bool near_boundary = false;
};

/// Every invariant violation, in a deterministic order. Empty means valid.
std::vector<std::string> validate(const System& sys);

Rational marginal_one(const System& sys, const ContentId& q, const ContextId& c);
Rational pairwise_moment(const System& sys, const ContextId& c, const ContentId& q, const ContentId& q2);
/// Pr[R_q^c = +1] computed straight from a block.
Rational marginal_one(const ContextBlock& block, std::size_t position);

std::vector<Connection> connections(const System& sys);
ConnectednessAudit audit_connectedness(const System& sys);

System from_moments(const MomentSpec& spec, std::span<const PairLayout> layout);

System random_system(std::uint64_t seed, const CyclicShape& shape, bool consistent);

/// Copy of `sys` without context `c`. Contents are kept even if orphaned.
System delete_context(const System& sys, const ContextId& c);

}  // namespace ctx
