#include "bkvc/exact.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bkvc {

namespace {

class Enumerator {
 public:
  Enumerator(const BipartiteGraph& g, int k) : g_(g), k_(k), hits_(g.edges().size(), 0) {}

  ExactResult run() {
    current_.reserve(k_);
    best_value_ = -1;
    search(0, 0);
    ExactResult r;
    r.opt_value = best_value_;
    for (VertexId v : best_set_) (g_.side_of(v) == Side::kFirst ? r.k1 : r.k2)++;
    r.opt_set = VertexSet(best_set_);
    return r;
  }

 private:
  void add(VertexId v) {
    for (EdgeId e : g_.incident_edges(v)) covered_ += (hits_[e]++ == 0) ? 1 : 0;
  }
  void remove(VertexId v) {
    for (EdgeId e : g_.incident_edges(v)) covered_ -= (--hits_[e] == 0) ? 1 : 0;
  }

  // Coverage plus the largest residual degrees still available bounds any
  // completion of the current prefix.
  std::int64_t upper_bound(VertexId from, int remaining) {
    gains_.clear();
    for (VertexId v = from; v < g_.num_vertices(); ++v) {
      int gain = 0;
      for (EdgeId e : g_.incident_edges(v)) gain += hits_[e] == 0 ? 1 : 0;
      gains_.push_back(gain);
    }
    const int take = std::min<int>(remaining, static_cast<int>(gains_.size()));
    std::partial_sort(gains_.begin(), gains_.begin() + take, gains_.end(), std::greater<>());
    std::int64_t bound = covered_;
    for (int i = 0; i < take; ++i) bound += gains_[i];
    return bound;
  }

  void search(VertexId from, int depth) {
    if (depth == k_) {
      if (covered_ > best_value_) {
        best_value_ = covered_;
        best_set_ = current_;
      }
      return;
    }
    const int remaining = k_ - depth;
    const int n = g_.num_vertices();
    if (n - from < remaining) return;
    if (best_value_ >= 0 && upper_bound(from, remaining) <= best_value_) return;
    for (VertexId v = from; v <= n - remaining; ++v) {
      add(v);
      current_.push_back(v);
      search(v + 1, depth + 1);
      current_.pop_back();
      remove(v);
    }
  }

  const BipartiteGraph& g_;
  int k_;
  std::vector<int> hits_;
  std::int64_t covered_ = 0;
  std::int64_t best_value_ = -1;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_set_;
  std::vector<int> gains_;
};

}  // namespace

ExactResult brute_force_opt(const BipartiteGraph& g, int k, const ExactOptions& options) {
  if (k < 0) throw std::invalid_argument("brute_force_opt: k must be nonnegative");
  if (g.num_vertices() > options.max_vertices) {
    throw std::length_error("brute_force_opt: instance has " + std::to_string(g.num_vertices()) +
                            " vertices, guard is " + std::to_string(options.max_vertices) +
                            " (raise ExactOptions::max_vertices to override)");
  }
  return Enumerator(g, std::min(k, g.num_vertices())).run();
}

}  // namespace bkvc
