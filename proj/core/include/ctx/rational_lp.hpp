#pragma once

#include <span>
#include <variant>
#include <vector>

#include "ctx/bool_matrix.hpp"
#include "ctx/rational.hpp"

namespace ctx {

struct Feasible {
  std::vector<Rational> x;  // M x = P, x >= 0

  friend bool operator==(const Feasible&, const Feasible&) = default;
};

struct Infeasible {
  std::vector<Rational> y;  // y^T M <= 0, y^T P > 0 (scaled so y^T P = 1)

  friend bool operator==(const Infeasible&, const Infeasible&) = default;
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

inline bool is_feasible(const FeasibilityResult& r) { return std::holds_alternative<Feasible>(r); }

/// Decides {M x = P, x >= 0} exactly with a dense phase-1 simplex under
/// Bland's rule. The infeasibility certificate is the phase-1 dual at
/// optimality. Throws Error{Domain} on a dimension mismatch or an empty M.
FeasibilityResult solve_feasibility(const BoolMatrix& m, std::span<const Rational> p);

bool verify_solution(const BoolMatrix& m, std::span<const Rational> p, std::span<const Rational> x);
bool verify_certificate(const BoolMatrix& m, std::span<const Rational> p, std::span<const Rational> y);

/// Dispatches to the verifier matching the witness kind.
bool verify_result(const BoolMatrix& m, std::span<const Rational> p, const FeasibilityResult& r);

}  // namespace ctx
