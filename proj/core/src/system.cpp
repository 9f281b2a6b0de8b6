#include "ctx/system.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "ctx/error.hpp"

namespace ctx {

namespace {

constexpr std::size_t kMaxContextWidth = 30;

const ContextBlock& require_context(const System& sys, const ContextId& c) {
  const ContextBlock* block = sys.find_context(c);
  if (block == nullptr) throw Error(ErrorKind::Domain, "unknown context \"" + c + "\"");
  return *block;
}

std::size_t require_position(const ContextBlock& block, const ContentId& q) {
  auto pos = block.position_of(q);
  if (!pos) throw Error(ErrorKind::Domain, "content \"" + q + "\" is not measured in context \"" + block.id + "\"");
  return *pos;
}

// Joint of a ±1 pair from its moments; entries in assignment order
// (+,+), (+,-), (-,+), (-,-).
std::vector<Rational> pair_joint(const PairMoments& m) {
  std::vector<Rational> joint;
  joint.reserve(4);
  for (std::size_t index = 0; index < 4; ++index) {
    const long x = assignment_value(index, 2, 0);
    const long y = assignment_value(index, 2, 1);
    joint.push_back((Rational(1) + Rational(x) * m.mean_first + Rational(y) * m.mean_second +
                     Rational(x * y) * m.product) /
                    Rational(4));
  }
  return joint;
}

bool pair_moments_valid(const PairMoments& m) {
  return std::ranges::all_of(pair_joint(m), [](const Rational& p) { return p.sign() >= 0; });
}

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi]; modulo bias is irrelevant at these widths.
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  Rational grid(long lo, long hi, long den) { return Rational(integer(lo, hi), den); }

private:
  std::mt19937_64 engine_;
};

constexpr long kGrid = 100;

}  // namespace

std::size_t assignment_count(std::size_t k) {
  if (k > kMaxContextWidth) throw Error(ErrorKind::SizeCap, "context with " + std::to_string(k) + " variables");
  return std::size_t{1} << k;
}

int assignment_value(std::size_t index, std::size_t k, std::size_t j) {
  return ((index >> (k - 1 - j)) & 1U) != 0 ? -1 : 1;
}

std::size_t assignment_index(std::span<const int> values) {
  std::size_t index = 0;
  for (int v : values) index = (index << 1) | (v < 0 ? 1U : 0U);
  return index;
}

std::vector<int> assignment_values(std::size_t index, std::size_t k) {
  std::vector<int> values(k);
  for (std::size_t j = 0; j < k; ++j) values[j] = assignment_value(index, k, j);
  return values;
}

std::string format_assignment(std::span<const ContentId> variables, std::size_t index) {
  std::string out = "(";
  for (std::size_t j = 0; j < variables.size(); ++j) {
    if (j != 0) out += ',';
    out += variables[j];
    out += assignment_value(index, variables.size(), j) > 0 ? "=+1" : "=-1";
  }
  return out + ")";
}

std::optional<std::size_t> ContextBlock::position_of(const ContentId& q) const {
  auto it = std::ranges::find(variables, q);
  if (it == variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables.begin());
}

const ContextBlock* System::find_context(const ContextId& c) const {
  auto it = std::ranges::find(contexts, c, &ContextBlock::id);
  return it == contexts.end() ? nullptr : &*it;
}

std::size_t System::membership_count() const {
  std::size_t m = 0;
  for (const auto& block : contexts) m += block.variables.size();
  return m;
}

std::vector<std::string> validate(const System& sys) {
  std::vector<std::string> out;
  if (sys.contexts.empty()) out.emplace_back("system has no contexts");

  std::set<ContentId> declared;
  for (const auto& q : sys.contents)
    if (!declared.insert(q).second) out.push_back("duplicate content \"" + q + "\"");

  std::set<ContextId> seen_contexts;
  for (const auto& block : sys.contexts) {
    const std::string where = "context \"" + block.id + "\"";
    if (!seen_contexts.insert(block.id).second) out.push_back("duplicate " + where);
    if (block.variables.empty()) out.push_back(where + ": no variables");

    std::set<ContentId> in_block;
    for (const auto& q : block.variables) {
      if (!declared.contains(q)) out.push_back(where + ": undeclared content \"" + q + "\"");
      if (!in_block.insert(q).second) out.push_back(where + ": content \"" + q + "\" listed more than once");
    }

    if (block.variables.size() > kMaxContextWidth) {
      out.push_back(where + ": too many variables");
      continue;
    }
    const std::size_t expected = std::size_t{1} << block.variables.size();
    if (block.joint.size() != expected) {
      out.push_back(where + ": joint has " + std::to_string(block.joint.size()) + " entries, expected " +
                    std::to_string(expected));
      continue;
    }

    Rational total;
    for (std::size_t index = 0; index < block.joint.size(); ++index) {
      const Rational& p = block.joint[index];
      if (p.sign() < 0)
        out.push_back(where + ": negative probability " + p.to_string() + " at " +
                      format_assignment(block.variables, index));
      total += p;
    }
    if (total != Rational(1)) out.push_back(where + ": probabilities sum to " + total.to_string() + ", not 1");
  }
  return out;
}

Rational marginal_one(const ContextBlock& block, std::size_t position) {
  const std::size_t k = block.variables.size();
  Rational p;
  for (std::size_t index = 0; index < block.joint.size(); ++index)
    if (assignment_value(index, k, position) > 0) p += block.joint[index];
  return p;
}

Rational marginal_one(const System& sys, const ContentId& q, const ContextId& c) {
  const auto& block = require_context(sys, c);
  return marginal_one(block, require_position(block, q));
}

Rational pairwise_moment(const System& sys, const ContextId& c, const ContentId& q, const ContentId& q2) {
  const auto& block = require_context(sys, c);
  const std::size_t i = require_position(block, q);
  const std::size_t j = require_position(block, q2);
  if (i == j) throw Error(ErrorKind::Domain, "pairwise moment needs two distinct contents");
  const std::size_t k = block.variables.size();
  Rational moment;
  for (std::size_t index = 0; index < block.joint.size(); ++index) {
    if (assignment_value(index, k, i) == assignment_value(index, k, j))
      moment += block.joint[index];
    else
      moment -= block.joint[index];
  }
  return moment;
}

std::vector<Connection> connections(const System& sys) {
  std::vector<Connection> out;
  for (const auto& q : sys.contents) {
    Connection conn{q, {}};
    for (const auto& block : sys.contexts)
      if (block.position_of(q)) conn.contexts.push_back(block.id);
    if (conn.contexts.size() >= 2) out.push_back(std::move(conn));
  }
  return out;
}

ConnectednessAudit audit_connectedness(const System& sys) {
  ConnectednessAudit audit;
  for (const auto& conn : connections(sys)) {
    std::vector<Rational> p;
    p.reserve(conn.contexts.size());
    for (const auto& c : conn.contexts) p.push_back(marginal_one(sys, conn.content, c));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b)
        if (p[a] != p[b])
          audit.violations.push_back({conn.content, conn.contexts[a], conn.contexts[b], p[a], p[b]});
  }
  audit.consistent = audit.violations.empty();
  return audit;
}

System from_moments(const MomentSpec& spec, std::span<const PairLayout> layout) {
  if (spec.size() != layout.size())
    throw Error(ErrorKind::Domain, "moment spec and layout have different lengths");
  System sys;
  auto declare = [&](const ContentId& q) {
    if (std::ranges::find(sys.contents, q) == sys.contents.end()) sys.contents.push_back(q);
  };
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& place = layout[i];
    if (place.first == place.second)
      throw Error(ErrorKind::Domain, "context \"" + place.context + "\" pairs a content with itself");
    declare(place.first);
    declare(place.second);
    ContextBlock block{place.context, {place.first, place.second}, pair_joint(spec[i])};
    for (std::size_t index = 0; index < 4; ++index)
      if (block.joint[index].sign() < 0)
        throw Error(ErrorKind::Invalid, "context \"" + place.context + "\": moments induce negative probability " +
                                            block.joint[index].to_string() + " at " +
                                            format_assignment(block.variables, index));
    sys.contexts.push_back(std::move(block));
  }
  return sys;
}

System random_system(std::uint64_t seed, const CyclicShape& shape, bool consistent) {
  const int n = shape.rank;
  if (n < 2) throw Error(ErrorKind::Domain, "cyclic rank must be at least 2");
  Sampler rng(seed);

  std::vector<PairLayout> layout;
  for (int i = 0; i < n; ++i)
    layout.push_back({"c" + std::to_string(i + 1), "q" + std::to_string(i + 1), "q" + std::to_string((i + 1) % n + 1)});

  // Steered corpora keep marginals near 1/2 so the correlation ranges stay wide.
  const long mean_span = shape.near_boundary ? kGrid / 5 : kGrid;

  for (;;) {
    MomentSpec spec(static_cast<std::size_t>(n));
    if (consistent) {
      std::vector<Rational> mean(static_cast<std::size_t>(n));
      for (auto& m : mean) m = rng.grid(-mean_span, mean_span, kGrid);
      for (int i = 0; i < n; ++i) {
        spec[static_cast<std::size_t>(i)].mean_first = mean[static_cast<std::size_t>(i)];
        spec[static_cast<std::size_t>(i)].mean_second = mean[static_cast<std::size_t>((i + 1) % n)];
      }
    } else {
      for (auto& m : spec) {
        m.mean_first = rng.grid(-mean_span, mean_span, kGrid);
        m.mean_second = rng.grid(-mean_span, mean_span, kGrid);
      }
    }

    auto sample_product = [&](PairMoments& m) {
      do {
        m.product = rng.grid(-kGrid, kGrid, kGrid);
      } while (!pair_moments_valid(m));
    };

    if (!shape.near_boundary) {
      for (auto& m : spec) sample_product(m);
      return from_moments(spec, layout);
    }

    // Solve for the last correlation so that sum(e) - 2 e_last = (n - 2) + delta
    // with e_last the minimum, i.e. the odd-flip statistic sits at the bound.
    const Rational target = Rational(n - 2) + rng.grid(-kGrid, kGrid, kGrid * kGrid);
    for (int attempt = 0; attempt < 200; ++attempt) {
      Rational head_sum;
      Rational head_min(1);
      for (int i = 0; i + 1 < n; ++i) {
        auto& m = spec[static_cast<std::size_t>(i)];
        sample_product(m);
        head_sum += m.product;
        head_min = min(head_min, m.product);
      }
      auto& last = spec.back();
      last.product = head_sum - target;
      if (last.product <= head_min && last.product >= Rational(-1) && pair_moments_valid(last))
        return from_moments(spec, layout);
    }
  }
}

System delete_context(const System& sys, const ContextId& c) {
  System out = sys;
  auto it = std::ranges::find(out.contexts, c, &ContextBlock::id);
  if (it == out.contexts.end()) throw Error(ErrorKind::Domain, "unknown context \"" + c + "\"");
  out.contexts.erase(it);
  return out;
}

}  // namespace ctx
