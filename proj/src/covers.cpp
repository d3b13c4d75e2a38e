#include "bkvc/covers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bkvc {

namespace {

// Accumulates a solution while tracking covered edges.
class Builder {
 public:
  explicit Builder(const BipartiteGraph& g) : g_(g), mask_(g) {}

  void add(const VertexSet& set) {
    for (VertexId v : set) {
      if (!chosen_.contains(v)) mask_.cover_vertex(g_, v);
    }
    chosen_ = set_union(chosen_, set);
  }

  // Best `budget` vertices of `pool` (residual degrees); when the pool runs
  // dry the rest comes from `spill`.
  void complete(const VertexSet& pool, int budget, Side spill) {
    if (budget <= 0) return;
    VertexSet picked = best_among(g_, set_difference(pool, chosen_), budget, mask_);
    add(picked);
    const int remaining = budget - static_cast<int>(picked.size());
    if (remaining > 0) add(best_k(g_, spill, remaining, chosen_, mask_));
  }

  const VertexSet& chosen() const { return chosen_; }

  CoverSolution finish(std::string algorithm) const {
    CoverSolution s;
    s.chosen = chosen_;
    s.value = mask_.count();
    s.algorithm = std::move(algorithm);
    return s;
  }

 private:
  const BipartiteGraph& g_;
  EdgeMask mask_;
  VertexSet chosen_;
};

CoverSolution make_solution(const BipartiteGraph& g, VertexSet chosen, std::string algorithm) {
  CoverSolution s;
  s.value = covered_edges(g, chosen);
  s.chosen = std::move(chosen);
  s.algorithm = std::move(algorithm);
  return s;
}

// Keeps the first strictly better candidate.
void keep_best(std::optional<CoverSolution>& best, CoverSolution candidate) {
  if (!best || candidate.value > best->value) best = std::move(candidate);
}

}  // namespace

PartitionLayout make_layout(const BipartiteGraph& g, const Guess& guess) {
  PartitionLayout layout;
  layout.guess = guess;
  layout.s1 = best_k(g, Side::kFirst, guess.k1);
  layout.s2 = best_k(g, Side::kSecond, guess.k2);
  layout.x1 = best_k(g, Side::kFirst, guess.k1 - guess.k1p, layout.s1);
  layout.x2 = best_k(g, Side::kSecond, guess.k2 - guess.k2p, layout.s2);
  return layout;
}

CoverSolution greedy(const BipartiteGraph& g, int k) {
  Builder b(g);
  EdgeMask mask(g);
  std::vector<VertexId> picked;
  std::int64_t covered = 0;
  for (int step = 0; step < k && covered < g.num_edges(); ++step) {
    VertexId best = -1;
    int best_gain = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const int gain = residual_degree(g, v, mask);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) break;
    mask.cover_vertex(g, best);
    covered += best_gain;
    picked.push_back(best);
  }
  b.add(VertexSet(std::move(picked)));
  return b.finish("greedy");
}

std::array<CoverSolution, 3> two_thirds_split(const BipartiteGraph& g, int k1, int k2) {
  const VertexSet s1 = best_k(g, Side::kFirst, k1);
  const VertexSet s2 = best_k(g, Side::kSecond, k2);
  std::array<CoverSolution, 3> out;

  Builder sol1(g);
  sol1.add(s1);
  sol1.add(best_k(g, Side::kSecond, k2, {}, EdgeMask(g, s1)));
  out[0] = sol1.finish("two-thirds");

  Builder sol2(g);
  sol2.add(s2);
  sol2.add(best_k(g, Side::kFirst, k1, {}, EdgeMask(g, s2)));
  out[1] = sol2.finish("two-thirds");

  out[2] = make_solution(g, set_union(s1, s2), "two-thirds");
  for (int i = 0; i < 3; ++i) {
    out[i].guess = Guess{k1, k2, 0, 0, false};
    out[i].sol_index = i + 1;
  }
  return out;
}

CoverSolution two_thirds(const BipartiteGraph& g, int k) {
  const int kk = std::clamp(k, 0, g.num_vertices());
  std::optional<CoverSolution> best;
  for (int k1 = std::max(0, kk - g.n2()); k1 <= std::min(kk, g.n1()); ++k1) {
    for (auto& s : two_thirds_split(g, k1, kk - k1)) keep_best(best, std::move(s));
  }
  if (!best) best = make_solution(g, {}, "two-thirds");
  return *best;
}

NuXiZeroIteration nu_xi_zero_iteration(const BipartiteGraph& g, int k, int i) {
  NuXiZeroIteration it;
  it.a = best_k(g, Side::kFirst, i);
  it.b_prime = best_k(g, Side::kSecond, k - i);
  it.from_first = make_solution(
      g, set_union(it.a, best_k(g, Side::kSecond, k - i, {}, EdgeMask(g, it.a))), "nu-xi-zero");
  it.from_second = make_solution(
      g, set_union(best_k(g, Side::kFirst, i, {}, EdgeMask(g, it.b_prime)), it.b_prime),
      "nu-xi-zero");
  return it;
}

CoverSolution nu_xi_zero(const BipartiteGraph& g, int k) {
  std::optional<CoverSolution> best;
  const int kk = std::clamp(k, 0, g.num_vertices());
  for (int i = 0; i <= kk; ++i) {
    NuXiZeroIteration it = nu_xi_zero_iteration(g, kk, i);
    keep_best(best, std::move(it.from_first));
    keep_best(best, std::move(it.from_second));
  }
  return *best;
}

int fraction_count(double fraction, int size) {
  if (size <= 0 || fraction <= 0.0) return 0;
  const double x = fraction * size;
  double r = std::ceil(x);
  // A product that lands a rounding error above an integer counts as that integer.
  if (r - 1.0 >= x - 1e-9 * std::max(1.0, x)) r -= 1.0;
  return std::clamp(static_cast<int>(r), 0, size);
}

double lambda_limit(const Guess& guess) {
  if (guess.k2 == 0) return 0.0;
  const double mu = static_cast<double>(guess.k1) / guess.k2;
  const double xi = static_cast<double>(guess.k2p) / guess.k2;
  return (1.0 + mu) / (2.0 - xi);
}

VertexSet vertical_separation(const BipartiteGraph& g, const PartitionLayout& layout, int which,
                              double fraction) {
  if (which != 5 && which != 6) {
    throw std::invalid_argument("vertical_separation: solution index must be 5 or 6");
  }
  const int k = layout.guess.k1 + layout.guess.k2;
  const VertexSet& s = which == 5 ? layout.s1 : layout.s2;
  const VertexSet& x = which == 5 ? layout.x1 : layout.x2;
  const int from_s = std::min(fraction_count(fraction, static_cast<int>(s.size())), k);
  const int from_x = std::min(fraction_count(fraction, static_cast<int>(x.size())), k - from_s);
  return set_union(best_among(g, s, from_s), best_among(g, x, from_x));
}

CoverSolution build_solution(const BipartiteGraph& g, const PartitionLayout& layout, int which,
                             double pi, double lambda) {
  const Guess& q = layout.guess;
  const int k = q.k1 + q.k2;
  const VertexSet v1 = g.side_vertices(Side::kFirst);
  const VertexSet v2 = g.side_vertices(Side::kSecond);
  auto label = [&](CoverSolution s) {
    s.algorithm = "kvc";
    s.guess = q;
    s.sol_index = which;
    return s;
  };

  switch (which) {
    case 1: {
      Builder b(g);
      b.add(layout.s1);
      b.complete(v2, k - static_cast<int>(b.chosen().size()), Side::kFirst);
      return label(b.finish(""));
    }
    case 2: {
      Builder b(g);
      b.add(layout.s2);
      b.complete(v1, k - static_cast<int>(b.chosen().size()), Side::kSecond);
      return label(b.finish(""));
    }
    case 3: {
      Builder b(g);
      b.add(set_union(layout.s1, layout.x1));
      b.complete(v2, k - static_cast<int>(b.chosen().size()), Side::kFirst);
      return label(b.finish(""));
    }
    case 4: {
      // Completion variants after S2; the analytic bounds of either branch are
      // dominated by one of them.
      std::optional<CoverSolution> best;
      {
        Builder b(g);
        b.add(layout.s2);
        b.complete(set_difference(v2, layout.s2), k - static_cast<int>(b.chosen().size()),
                   Side::kFirst);
        keep_best(best, b.finish(""));
      }
      const VertexSet s2x2 = set_union(layout.s2, layout.x2);
      if (static_cast<int>(s2x2.size()) <= k) {
        Builder within(g);
        within.add(s2x2);
        within.complete(set_difference(v2, s2x2), k - static_cast<int>(within.chosen().size()),
                        Side::kFirst);
        keep_best(best, within.finish(""));

        Builder across(g);
        across.add(s2x2);
        across.complete(v1, k - static_cast<int>(across.chosen().size()), Side::kSecond);
        keep_best(best, across.finish(""));
      }
      return label(*best);
    }
    case 5: {
      Builder b(g);
      b.add(vertical_separation(g, layout, 5, pi));
      b.complete(v2, k - static_cast<int>(b.chosen().size()), Side::kFirst);
      return label(b.finish(""));
    }
    case 6: {
      Builder b(g);
      b.add(vertical_separation(g, layout, 6, lambda));
      b.complete(v1, k - static_cast<int>(b.chosen().size()), Side::kSecond);
      return label(b.finish(""));
    }
    default:
      throw std::invalid_argument("build_solution: solution index must be in 1..6, got " +
                                  std::to_string(which));
  }
}

CoverSolution kvc_algorithm(const BipartiteGraph& g, int k, double pi, double lambda) {
  std::optional<CoverSolution> best;
  const int kk = std::clamp(k, 0, g.num_vertices());
  const int small = std::min(g.n1(), g.n2());
  if (kk >= small) {
    const Side side = g.n1() <= g.n2() ? Side::kFirst : Side::kSecond;
    CoverSolution s = make_solution(g, g.side_vertices(side), "kvc");
    keep_best(best, std::move(s));
  }

  const BipartiteGraph flipped = g.transposed();
  for (int k1 = 0; k1 <= std::min(kk, g.n1()); ++k1) {
    const int k2 = kk - k1;
    if (k2 > g.n2()) continue;
    const bool swap = k1 > k2;
    const BipartiteGraph& h = swap ? flipped : g;
    const int a = swap ? k2 : k1;
    const int b = swap ? k1 : k2;
    for (int ap = 0; ap <= a; ++ap) {
      for (int bp = 0; bp <= b; ++bp) {
        const Guess guess{a, b, ap, bp, swap};
        const PartitionLayout layout = make_layout(h, guess);
        const double lam = b > 0 ? std::min(lambda, lambda_limit(guess)) : lambda;
        for (int which = 1; which <= 6; ++which) {
          CoverSolution s = build_solution(h, layout, which, pi, lam);
          if (best && s.value <= best->value) continue;
          // Transposing twice restores the original ids.
          if (swap) s.chosen = flipped.to_transposed(s.chosen);
          best = std::move(s);
        }
      }
    }
  }
  if (!best) best = make_solution(g, {}, "kvc");
  return *best;
}

}  // namespace bkvc
