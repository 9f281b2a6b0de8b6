#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ctx/bool_matrix.hpp"
#include "ctx/rational.hpp"
#include "ctx/system.hpp"

namespace ctx {

enum class Mode { Traditional, CbD };

std::string to_string(Mode mode);

inline constexpr int kDefaultSizeCapExponent = 20;

/// One (content, context) membership; a coordinate of every coupling atom.
struct MembershipPair {
  ContentId content;
  ContextId context;

  friend bool operator==(const MembershipPair&, const MembershipPair&) = default;
};

/// A full ±1 assignment to every membership pair.
struct CouplingAtom {
  std::size_t index = 0;
  std::vector<int> values;  // parallel to AtomSpace::pairs()
};

/// The ordered list of coupling atoms, kept implicit: atom `a` assigns pair
/// `p` the value +1 iff bit (m-1-p) of `a` is set (binary counting with
/// -1 -> 0, +1 -> 1, first pair most significant).
class AtomSpace {
public:
  AtomSpace() = default;
  explicit AtomSpace(std::vector<MembershipPair> pairs) : pairs_(std::move(pairs)) {}

  const std::vector<MembershipPair>& pairs() const { return pairs_; }
  std::size_t size() const { return std::size_t{1} << pairs_.size(); }
  int value(std::size_t atom, std::size_t pair) const {
    return ((atom >> (pairs_.size() - 1 - pair)) & 1U) != 0 ? 1 : -1;
  }
  CouplingAtom operator[](std::size_t atom) const;
  /// One '+' or '-' per membership pair, in pair order.
  std::string label(std::size_t atom) const;
  std::size_t pair_index(const ContentId& q, const ContextId& c) const;

  friend bool operator==(const AtomSpace&, const AtomSpace&) = default;

private:
  std::vector<MembershipPair> pairs_;
};

struct BunchLabel {
  ContextId context;
  std::vector<ContentId> variables;
  std::size_t assignment = 0;  // assignment_index over `variables`

  friend bool operator==(const BunchLabel&, const BunchLabel&) = default;
};

struct ConnectionLabel {
  ContentId content;
  ContextId context_a;
  ContextId context_b;
  int value_a = 1;
  int value_b = 1;

  friend bool operator==(const ConnectionLabel&, const ConnectionLabel&) = default;
};

using RowLabel = std::variant<BunchLabel, ConnectionLabel>;

std::string to_string(const RowLabel& label);

struct ConstraintRow {
  RowLabel label;
  std::vector<bool> coefficients;  // one indicator per atom
  Rational rhs;

  friend bool operator==(const ConstraintRow&, const ConstraintRow&) = default;
};

/// Maximal coupling of two ±1 variables S, S' with Pr[S=1]=p_first,
/// Pr[S'=1]=p_second: the smaller marginal's +1 forces the other's +1.
struct MaximalCouplingTable {
  Rational p_first;
  Rational p_second;
  Rational p_low;
  Rational p_high;
  Rational both_plus;     // Pr[S=+1, S'=+1] = min(p, p')
  Rational plus_minus;    // Pr[S=+1, S'=-1]
  Rational minus_plus;    // Pr[S=-1, S'=+1]
  Rational both_minus;    // Pr[S=-1, S'=-1] = 1 - max(p, p')

  const Rational& cell(int s, int s2) const;
  Rational equal_probability() const { return both_plus + both_minus; }
};

struct LpInstance {
  AtomSpace atoms;
  std::vector<ConstraintRow> rows;
  Mode mode = Mode::CbD;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return atoms.size(); }
  BoolMatrix matrix() const;
  std::vector<Rational> rhs() const;

  /// `label : rhs : indices-of-1-coefficients`, one line per row.
  std::string dump() const;

  friend bool operator==(const LpInstance&, const LpInstance&) = default;
};

/// Membership pairs in canonical order: contexts in system order, then the
/// context's variables in listed order. Throws SizeCap when 2^m exceeds
/// 2^cap_exponent.
AtomSpace enumerate_atoms(const System& sys, int cap_exponent = kDefaultSizeCapExponent);

std::vector<ConstraintRow> bunch_constraints(const System& sys, const AtomSpace& atoms);
std::vector<ConstraintRow> bunch_constraints(const System& sys);

MaximalCouplingTable maximal_coupling_pair(const Rational& p, const Rational& p2);

std::vector<ConstraintRow> connection_constraints(const System& sys, Mode mode, const AtomSpace& atoms);
std::vector<ConstraintRow> connection_constraints(const System& sys, Mode mode);

LpInstance build_lp(const System& sys, Mode mode, int cap_exponent = kDefaultSizeCapExponent);

}  // namespace ctx
