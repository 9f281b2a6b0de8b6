#include "ctx/rational_lp.hpp"

#include <cstddef>
#include <string>

#include "ctx/error.hpp"

namespace ctx {

namespace {

void check_dims(const BoolMatrix& m, std::size_t p_size, std::size_t v_size, std::size_t v_expected,
                const char* what) {
  if (m.rows() == 0 || m.cols() == 0) throw Error(ErrorKind::Domain, "constraint matrix is empty");
  if (p_size != m.rows())
    throw Error(ErrorKind::Domain, "rhs has " + std::to_string(p_size) + " entries for " +
                                       std::to_string(m.rows()) + " rows");
  if (v_size != v_expected)
    throw Error(ErrorKind::Domain, std::string(what) + " has " + std::to_string(v_size) + " entries, expected " +
                                       std::to_string(v_expected));
}

// Phase-1 tableau for  min sum(a)  s.t.  D M x + a = D P,  x, a >= 0,
// where D flips rows with negative rhs. Columns: n structural, r artificial,
// then the rhs. Row r is the reduced-cost row; its rhs holds -w.
class Tableau {
public:
  Tableau(const BoolMatrix& m, std::span<const Rational> p)
      : rows_(m.rows()), structural_(m.cols()), width_(m.cols() + m.rows() + 1),
        cells_((rows_ + 1) * width_), basis_(rows_), flipped_(rows_, false) {
    for (std::size_t i = 0; i < rows_; ++i) {
      flipped_[i] = p[i].sign() < 0;
      const long sign = flipped_[i] ? -1 : 1;
      for (std::size_t j = 0; j < structural_; ++j)
        if (m.at(i, j)) at(i, j) = sign;
      at(i, structural_ + i) = 1;
      at(i, rhs_col()) = flipped_[i] ? mpq_class(-p[i].raw()) : p[i].raw();
      basis_[i] = structural_ + i;
    }
    // Reduced costs with the artificial basis: d_j = -sum_i T[i][j] for
    // structural columns, 0 for artificials; rhs = -sum_i b_i.
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) at(rows_, j) -= at(i, j);
      at(rows_, rhs_col()) -= at(i, rhs_col());
    }
  }

  // Runs Bland-rule pivots to phase-1 optimality.
  void optimize() {
    mpq_class ratio;
    mpq_class best;
    for (;;) {
      const std::size_t entering = entering_column();
      if (entering == npos) return;

      std::size_t leaving = npos;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(at(i, entering)) <= 0) continue;
        ratio = at(i, rhs_col()) / at(i, entering);
        if (leaving == npos) {
          leaving = i;
          best = ratio;
          continue;
        }
        const int c = cmp(ratio, best);
        if (c < 0 || (c == 0 && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      // Phase 1 is bounded below by 0, so some row always qualifies.
      if (leaving == npos) throw Error(ErrorKind::Domain, "phase-1 simplex unbounded (internal error)");
      pivot(leaving, entering);
    }
  }

  bool zero_objective() const { return sgn(at(rows_, rhs_col())) == 0; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(structural_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < structural_) x[basis_[i]] = Rational(at(i, rhs_col()));
    return x;
  }

  // y_i = sign_i * (1 - d_{art i}), scaled so that y^T P = 1.
  std::vector<Rational> certificate() const {
    const mpq_class w = -at(rows_, rhs_col());
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      mpq_class dual = (1 - at(rows_, structural_ + i)) / w;
      if (flipped_[i]) dual = -dual;
      y[i] = Rational(std::move(dual));
    }
    return y;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t rhs_col() const { return width_ - 1; }
  mpq_class& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

  std::size_t entering_column() const {
    for (std::size_t j = 0; j + 1 < width_; ++j)
      if (sgn(at(rows_, j)) < 0) return j;
    return npos;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const mpq_class inv = 1 / at(pr, pc);
    support_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(at(pr, j)) == 0) continue;
      at(pr, j) *= inv;
      support_.push_back(j);
    }
    mpq_class factor;
    mpq_class scratch;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == pr || sgn(at(i, pc)) == 0) continue;
      factor = at(i, pc);
      for (std::size_t j : support_) {
        mpq_mul(scratch.get_mpq_t(), factor.get_mpq_t(), at(pr, j).get_mpq_t());
        mpq_sub(at(i, j).get_mpq_t(), at(i, j).get_mpq_t(), scratch.get_mpq_t());
      }
    }
    basis_[pr] = pc;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<mpq_class> cells_;
  std::vector<std::size_t> basis_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> support_;
};

}  // namespace

FeasibilityResult solve_feasibility(const BoolMatrix& m, std::span<const Rational> p) {
  check_dims(m, p.size(), 0, 0, "");
  Tableau tableau(m, p);
  tableau.optimize();
  if (tableau.zero_objective()) return Feasible{tableau.primal()};
  return Infeasible{tableau.certificate()};
}

bool verify_solution(const BoolMatrix& m, std::span<const Rational> p, std::span<const Rational> x) {
  check_dims(m, p.size(), x.size(), m.cols(), "solution");
  for (const auto& v : x)
    if (v.sign() < 0) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpq_class lhs;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) lhs += x[j].raw();
    if (cmp(lhs, p[i].raw()) != 0) return false;
  }
  return true;
}

bool verify_certificate(const BoolMatrix& m, std::span<const Rational> p, std::span<const Rational> y) {
  check_dims(m, p.size(), y.size(), m.rows(), "certificate");
  mpq_class yp;
  for (std::size_t i = 0; i < m.rows(); ++i) yp += y[i].raw() * p[i].raw();
  if (sgn(yp) <= 0) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpq_class col;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.at(i, j)) col += y[i].raw();
    if (sgn(col) > 0) return false;
  }
  return true;
}

bool verify_result(const BoolMatrix& m, std::span<const Rational> p, const FeasibilityResult& r) {
  if (const auto* f = std::get_if<Feasible>(&r)) return verify_solution(m, p, f->x);
  return verify_certificate(m, p, std::get<Infeasible>(r).y);
}

}  // namespace ctx
