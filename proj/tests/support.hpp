#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ctx/coupling_lp.hpp"
#include "ctx/criteria.hpp"
#include "ctx/rational.hpp"
#include "ctx/rational_lp.hpp"
#include "ctx/system.hpp"
#include "ctx/system_io.hpp"

namespace ctx::test {

inline const std::array<PairLayout, 4> kR4Layout{{
    {"c1", "q1", "q2"},
    {"c2", "q2", "q3"},
    {"c3", "q3", "q4"},
    {"c4", "q4", "q1"},
}};

/// Rank-4 cyclic system with uniform marginals and the given correlations.
inline System r4(const std::array<Rational, 4>& corr) {
  MomentSpec spec;
  for (const auto& e : corr) spec.push_back({Rational(0), Rational(0), e});
  return from_moments(spec, kR4Layout);
}

inline std::string fixture_path(const std::string& name) { return std::string(CTX_FIXTURE_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline System load_fixture(const std::string& name) { return parse_system(read_file(fixture_path(name))); }

/// Builds a context directly from (values, probability) entries.
inline ContextBlock make_context(ContextId id, std::vector<ContentId> vars,
                                 const std::vector<std::pair<std::vector<int>, Rational>>& entries) {
  ContextBlock block{std::move(id), std::move(vars), {}};
  block.joint.assign(assignment_count(block.variables.size()), Rational());
  for (const auto& [values, p] : entries) block.joint[assignment_index(values)] = p;
  return block;
}

/// Every ±1 tuple of length m, lexicographic with -1 first. Independent of
/// the library's bit encodings.
inline std::vector<std::vector<int>> all_tuples(std::size_t m) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int v : {-1, 1}) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

/// Exact Gaussian elimination: a solution of A x = b restricted to the
/// columns in `cols`, or nothing if those columns are dependent or the
/// system is inconsistent.
inline std::optional<std::vector<Rational>> solve_on_columns(const BoolMatrix& m, std::span<const Rational> p,
                                                             const std::vector<std::size_t>& cols) {
  const std::size_t r = m.rows();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rational(m.at(i, cols[j]) ? 1 : 0);
    a[i][k] = p[i];
  }
  std::size_t row = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t piv = row;
    while (piv < r && a[piv][j].is_zero()) ++piv;
    if (piv == r) return std::nullopt;  // dependent column
    std::swap(a[piv], a[row]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a[i][j].is_zero()) continue;
      const Rational f = a[i][j] / a[row][j];
      for (std::size_t c = j; c <= k; ++c) a[i][c] -= f * a[row][c];
    }
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (!a[i][k].is_zero()) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t j = 0; j < k; ++j) x[j] = a[j][k] / a[j][j];
  return x;
}

/// Brute-force feasibility: some basic solution (linearly independent
/// support) is nonnegative. Exponential in the column count.
inline bool brute_force_feasible(const BoolMatrix& m, std::span<const Rational> p) {
  const std::size_t n = m.cols();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> j) & 1U) cols.push_back(j);
    if (cols.size() > m.rows()) continue;
    auto x = solve_on_columns(m, p, cols);
    if (!x) continue;
    if (std::ranges::all_of(*x, [](const Rational& v) { return v.sign() >= 0; })) return true;
  }
  return false;
}

}  // namespace ctx::test
