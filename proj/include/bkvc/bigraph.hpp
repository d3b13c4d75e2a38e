#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bkvc {

// Color class of a bipartite graph.
enum class Side : std::uint8_t { kFirst = 1, kSecond = 2 };

inline Side other(Side s) { return s == Side::kFirst ? Side::kSecond : Side::kFirst; }

// Vertices are addressed by a global id: [0, n1) is the first color class,
// [n1, n1 + n2) the second one. This is also the "mixed index order" used
// wherever a canonical ordering of vertex sets matters.
using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Endpoints are local indices: u into the first class, v into the second.
struct Edge {
  std::int32_t u = 0;
  std::int32_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of global vertex ids, strictly increasing.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts the input; throws std::invalid_argument on duplicates or negatives.
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<VertexId> members)
      : VertexSet(std::vector<VertexId>(members)) {}

  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

 private:
  struct Sorted {};
  VertexSet(Sorted, std::vector<VertexId> members) : members_(std::move(members)) {}
  std::vector<VertexId> members_;
};

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Validates endpoint ranges and rejects duplicate edges
  // (std::invalid_argument). Edges are stored in lexicographic order.
  BipartiteGraph(int n1, int n2, std::vector<Edge> edges);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int num_vertices() const { return n1_ + n2_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int side_size(Side s) const { return s == Side::kFirst ? n1_ : n2_; }
  VertexId global_id(Side s, int local) const { return s == Side::kFirst ? local : n1_ + local; }
  Side side_of(VertexId v) const { return v < n1_ ? Side::kFirst : Side::kSecond; }
  int local_index(VertexId v) const { return v < n1_ ? v : v - n1_; }
  bool valid(VertexId v) const { return v >= 0 && v < num_vertices(); }

  VertexId first_endpoint(EdgeId e) const { return edges_[e].u; }
  VertexId second_endpoint(EdgeId e) const { return n1_ + edges_[e].v; }

  std::span<const EdgeId> incident_edges(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(incident_edges(v).size()); }

  VertexSet side_vertices(Side s) const;

  // Same graph with the color classes exchanged. Global ids change:
  // use to_transposed_id / from_transposed_id to translate.
  BipartiteGraph transposed() const;
  VertexId to_transposed_id(VertexId v) const { return v < n1_ ? n2_ + v : v - n1_; }
  VertexSet to_transposed(const VertexSet& s) const;

 private:
  int n1_ = 0;
  int n2_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> incidence_;       // CSR payload
  std::vector<std::int32_t> offsets_;   // num_vertices + 1
};

// Per-edge "already covered" flags. A default-constructed mask covers nothing.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(const BipartiteGraph& g) : bits_(g.edges().size(), 0) {}
  EdgeMask(const BipartiteGraph& g, const VertexSet& chosen);

  bool test(EdgeId e) const { return !bits_.empty() && bits_[e] != 0; }
  void cover_vertex(const BipartiteGraph& g, VertexId v);
  std::int64_t count() const;

 private:
  std::vector<std::uint8_t> bits_;
};

// Number of edges with at least one endpoint in `set`.
std::int64_t covered_edges(const BipartiteGraph& g, const VertexSet& set);

// Edges incident to v not yet covered by `precovered`.
int residual_degree(const BipartiteGraph& g, VertexId v, const EdgeMask& precovered);

// The k vertices of `candidates` with the largest residual degree; ties go to
// the smaller id. k is clamped to the number of candidates.
VertexSet best_among(const BipartiteGraph& g, const VertexSet& candidates, int k,
                     const EdgeMask& precovered = {});

// best_among over one color class minus `forbidden`.
VertexSet best_k(const BipartiteGraph& g, Side side, int k, const VertexSet& forbidden = {},
                 const EdgeMask& precovered = {});

// Every edge present independently with probability p.
BipartiteGraph generate_random(int n1, int n2, double p, std::uint64_t seed);

// Every first-class vertex has degree d1, every second-class vertex degree d2.
// Requires n1 * d1 == n2 * d2, d1 <= n2, d2 <= n1.
BipartiteGraph generate_semiregular(int n1, int n2, int d1, int d2, std::uint64_t seed);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   c <comment>
//   p bkvc <n1> <n2> <m>
//   e <u> <v>          (m times, 0-based local indices)
BipartiteGraph parse_graph(std::string_view text);
std::string serialize_graph(const BipartiteGraph& g);

BipartiteGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const BipartiteGraph& g);

}  // namespace bkvc
