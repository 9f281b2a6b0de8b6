#include "ctx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <thread>

#include "ctx/coupling_lp.hpp"
#include "ctx/error.hpp"
#include "ctx/rational_lp.hpp"

namespace ctx {

namespace {

// Column-major working copy so that the entering column is contiguous.
// Largest-reduced-cost entering rule; falls back to lowest-index entering
// once a run of degenerate pivots suggests stalling.
class FloatPhaseOne {
public:
  FloatPhaseOne(const BoolMatrix& m, std::span<const Rational> p)
      : r_(m.rows()), n_(m.cols() + m.rows()), col_(n_, std::vector<double>(r_, 0.0)), b_(r_), cost_(n_, 0.0),
        in_basis_(r_) {
    for (std::size_t i = 0; i < r_; ++i) {
      const double sign = p[i].sign() < 0 ? -1.0 : 1.0;
      b_[i] = sign * p[i].to_double();
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j)) col_[j][i] = sign;
      col_[m.cols() + i][i] = 1.0;
      in_basis_[i] = m.cols() + i;
    }
    // Relative cost of pushing each structural column into the artificial basis.
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < r_; ++i) cost_[j] += col_[j][i];
    first_artificial_ = m.cols();
  }

  double run() {
    constexpr double eps = 1e-12;
    std::size_t degenerate_streak = 0;
    const std::size_t limit = 200 * (n_ + r_);
    for (std::size_t iter = 0; iter < limit; ++iter) {
      std::size_t enter = n_;
      if (degenerate_streak < 50) {
        double best = eps;
        for (std::size_t j = 0; j < n_; ++j)
          if (cost_[j] > best) {
            best = cost_[j];
            enter = j;
          }
      } else {
        for (std::size_t j = 0; j < n_ && enter == n_; ++j)
          if (cost_[j] > eps) enter = j;
      }
      if (enter == n_) break;

      const auto& column = col_[enter];
      std::size_t leave = r_;
      double ratio = 0.0;
      for (std::size_t i = 0; i < r_; ++i) {
        if (column[i] <= eps) continue;
        const double t = b_[i] / column[i];
        if (leave == r_ || t < ratio - eps || (t <= ratio + eps && in_basis_[i] < in_basis_[leave])) {
          leave = i;
          ratio = t;
        }
      }
      if (leave == r_) break;
      degenerate_streak = ratio <= eps ? degenerate_streak + 1 : 0;
      pivot(leave, enter);
    }
    double w = 0.0;
    for (std::size_t i = 0; i < r_; ++i)
      if (in_basis_[i] >= first_artificial_) w += std::max(b_[i], 0.0);
    return w;
  }

private:
  void pivot(std::size_t row, std::size_t enter) {
    const std::vector<double> pivot_col = col_[enter];
    const double scale = pivot_col[row];
    b_[row] /= scale;
    for (auto& c : col_) c[row] /= scale;
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == row || pivot_col[i] == 0.0) continue;
      const double f = pivot_col[i];
      b_[i] -= f * b_[row];
      for (auto& c : col_) c[i] -= f * c[row];
    }
    const double fc = cost_[enter];
    for (std::size_t j = 0; j < n_; ++j) cost_[j] -= fc * col_[j][row];
    in_basis_[row] = enter;
  }

  std::size_t r_;
  std::size_t n_;
  std::vector<std::vector<double>> col_;
  std::vector<double> b_;
  std::vector<double> cost_;
  std::vector<std::size_t> in_basis_;
  std::size_t first_artificial_ = 0;
};

std::uint64_t mix_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 1;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct EntryOutcome {
  CrossCheckEntry entry;
  std::vector<Disagreement> disagreements;
  std::size_t solves = 0;
  std::size_t verified = 0;
};

EntryOutcome check_member(std::uint64_t seed, std::size_t index, const CorpusShape& shape) {
  EntryOutcome out;
  auto& e = out.entry;
  e.index = index;
  e.steered = corpus_member_steered(index, shape);
  const System sys = corpus_system(seed, index, shape);

  // analyze() refuses to return an unverified witness.
  const auto cbd = analyze(sys, Mode::CbD);
  ++out.solves;
  ++out.verified;
  e.exact_cbd = cbd.decision;

  const auto audit = audit_connectedness(sys);
  if (audit.consistent) {
    const auto traditional = analyze(sys, Mode::Traditional);
    ++out.solves;
    ++out.verified;
    e.exact_traditional = traditional.decision;
    e.lp_identical_across_modes = same_constraints(traditional.lp, cbd.lp);
    if (!e.lp_identical_across_modes || traditional.decision != cbd.decision)
      out.disagreements.push_back({index, "traditional-vs-cbd",
                                   "traditional " + to_string(traditional.decision) + ", cbd " +
                                       to_string(cbd.decision) +
                                       (e.lp_identical_across_modes ? "" : ", constraint sets differ")});

    std::vector<Rational> corr;
    for (const auto& block : sys.contexts)
      corr.push_back(pairwise_moment(sys, block.id, block.variables[0], block.variables[1]));
    e.boundary_distance = (odd_flip_statistic(corr) - Rational(shape.rank - 2)).abs();
  }

  if (shape.rank == 4) {
    const auto chsh = chsh_criterion(sys);
    e.closed_form = chsh.decision;
    const bool min_only = chsh.statistic <= Rational(2) && chsh.consistency_holds;
    e.closed_form_min_only = min_only ? Decision::Noncontextual : Decision::Contextual;
    if (audit.consistent && chsh.decision != cbd.decision)
      out.disagreements.push_back({index, "exact-vs-closed-form",
                                   "lp " + to_string(cbd.decision) + ", closed form " + to_string(chsh.decision) +
                                       ", statistic " + chsh.statistic.to_string()});
  }

  e.float_result = float_feasibility(cbd.lp.matrix(), cbd.lp.rhs());
  const bool hard_contradiction =
      (e.float_result.verdict == FloatVerdict::Feasible && cbd.decision == Decision::Contextual) ||
      (e.float_result.verdict == FloatVerdict::Infeasible && cbd.decision == Decision::Noncontextual);
  if (hard_contradiction) {
    std::string detail = "exact " + to_string(cbd.decision) + ", float " + to_string(e.float_result.verdict) +
                         " (objective " + std::to_string(e.float_result.objective) + ")";
    if (e.boundary_distance) detail += ", distance to boundary " + std::to_string(e.boundary_distance->to_double());
    out.disagreements.push_back({index, "exact-vs-float", detail});
  }
  return out;
}

}  // namespace

std::string to_string(FloatVerdict v) {
  switch (v) {
    case FloatVerdict::Feasible: return "feasible";
    case FloatVerdict::Infeasible: return "infeasible";
    case FloatVerdict::Marginal: return "marginal";
  }
  return "marginal";
}

FloatFeasibility float_feasibility(const BoolMatrix& m, std::span<const Rational> p, double tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorKind::Domain, "oracle tolerance must be positive");
  if (m.rows() == 0 || m.cols() == 0 || p.size() != m.rows())
    throw Error(ErrorKind::Domain, "dimension mismatch in float feasibility");
  FloatPhaseOne lp(m, p);
  FloatFeasibility out;
  out.objective = lp.run();
  if (out.objective <= tolerance * 1e-3)
    out.verdict = FloatVerdict::Feasible;
  else if (out.objective > tolerance)
    out.verdict = FloatVerdict::Infeasible;
  else
    out.verdict = FloatVerdict::Marginal;
  return out;
}

CorpusShape CorpusShape::parse(const std::string& text) {
  static const std::regex pattern(R"(rank([0-9]+)-(consistent|inconsistent))");
  std::smatch match;
  if (!std::regex_match(text, match, pattern))
    throw Error(ErrorKind::Domain, "corpus shape must look like rank4-consistent or rank2-inconsistent, got \"" +
                                       text + "\"");
  CorpusShape shape;
  shape.rank = std::stoi(match[1].str());
  shape.consistent = match[2].str() == "consistent";
  if (shape.rank < 2) throw Error(ErrorKind::Domain, "corpus rank must be at least 2");
  return shape;
}

std::string CorpusShape::name() const {
  return "rank" + std::to_string(rank) + (consistent ? "-consistent" : "-inconsistent");
}

bool corpus_member_steered(std::size_t index, const CorpusShape& shape) {
  return shape.consistent && index % 10 == 0;
}

System corpus_system(std::uint64_t seed, std::size_t index, const CorpusShape& shape) {
  CyclicShape cyclic{shape.rank, corpus_member_steered(index, shape)};
  return random_system(mix_seed(seed, index), cyclic, shape.consistent);
}

std::size_t CrossCheckReport::near_boundary_count(const Rational& band) const {
  return static_cast<std::size_t>(std::ranges::count_if(
      entries, [&](const CrossCheckEntry& e) { return e.boundary_distance && *e.boundary_distance <= band; }));
}

std::size_t CrossCheckReport::marginal_count() const {
  return static_cast<std::size_t>(std::ranges::count_if(
      entries, [](const CrossCheckEntry& e) { return e.float_result.verdict == FloatVerdict::Marginal; }));
}

CrossCheckReport run_corpus(std::uint64_t seed, std::size_t count, const CorpusShape& shape, unsigned threads) {
  if (count == 0) throw Error(ErrorKind::Domain, "corpus count must be at least 1");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::vector<EntryOutcome> outcomes(count);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) outcomes[i] = check_member(seed, i, shape);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  CrossCheckReport report;
  report.seed = seed;
  report.count = count;
  report.shape = shape;
  for (auto& o : outcomes) {
    report.entries.push_back(std::move(o.entry));
    std::ranges::move(o.disagreements, std::back_inserter(report.disagreements));
    report.solves += o.solves;
    report.witnesses_verified += o.verified;
  }
  return report;
}

Rational odd_flip_statistic(std::span<const Rational> correlations) {
  Rational sum_abs;
  std::size_t negatives = 0;
  Rational smallest_abs(1);
  for (const auto& e : correlations) {
    const Rational a = e.abs();
    sum_abs += a;
    smallest_abs = min(smallest_abs, a);
    if (e.sign() < 0) ++negatives;
  }
  if (negatives % 2 == 1) return sum_abs;
  return sum_abs - Rational(2) * smallest_abs;
}

}  // namespace ctx
