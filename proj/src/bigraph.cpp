#include "bkvc/bigraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "bkvc/rng.hpp"

namespace bkvc {

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw std::invalid_argument("VertexSet: negative vertex id");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("VertexSet: duplicate vertex id");
  }
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(VertexSet::Sorted{}, std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(VertexSet::Sorted{}, std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(VertexSet::Sorted{}, std::move(out));
}

BipartiteGraph::BipartiteGraph(int n1, int n2, std::vector<Edge> edges)
    : n1_(n1), n2_(n2), edges_(std::move(edges)) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("BipartiteGraph: negative class size");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n1 || e.v < 0 || e.v >= n2) {
      throw std::invalid_argument("BipartiteGraph: edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("BipartiteGraph: duplicate edge (" + std::to_string(dup->u) +
                                "," + std::to_string(dup->v) + ")");
  }

  const int n = n1 + n2;
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[n1 + e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(2 * edges_.size());
  std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    incidence_[fill[edges_[id].u]++] = id;
    incidence_[fill[n1 + edges_[id].v]++] = id;
  }
}

std::span<const EdgeId> BipartiteGraph::incident_edges(VertexId v) const {
  return std::span<const EdgeId>(incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]);
}

VertexSet BipartiteGraph::side_vertices(Side s) const {
  std::vector<VertexId> ids(side_size(s));
  std::iota(ids.begin(), ids.end(), global_id(s, 0));
  return VertexSet(std::move(ids));
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const Edge& e : edges_) flipped.push_back({e.v, e.u});
  return BipartiteGraph(n2_, n1_, std::move(flipped));
}

VertexSet BipartiteGraph::to_transposed(const VertexSet& s) const {
  std::vector<VertexId> ids;
  ids.reserve(s.size());
  for (VertexId v : s) ids.push_back(to_transposed_id(v));
  return VertexSet(std::move(ids));
}

EdgeMask::EdgeMask(const BipartiteGraph& g, const VertexSet& chosen) : EdgeMask(g) {
  for (VertexId v : chosen) cover_vertex(g, v);
}

void EdgeMask::cover_vertex(const BipartiteGraph& g, VertexId v) {
  if (bits_.empty()) bits_.assign(g.edges().size(), 0);
  for (EdgeId e : g.incident_edges(v)) bits_[e] = 1;
}

std::int64_t EdgeMask::count() const {
  return std::count(bits_.begin(), bits_.end(), std::uint8_t{1});
}

namespace {

void check_members(const BipartiteGraph& g, const VertexSet& set) {
  for (VertexId v : set) {
    if (!g.valid(v)) {
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    }
  }
}

}  // namespace

std::int64_t covered_edges(const BipartiteGraph& g, const VertexSet& set) {
  check_members(g, set);
  return EdgeMask(g, set).count();
}

int residual_degree(const BipartiteGraph& g, VertexId v, const EdgeMask& precovered) {
  int d = 0;
  for (EdgeId e : g.incident_edges(v)) d += precovered.test(e) ? 0 : 1;
  return d;
}

VertexSet best_among(const BipartiteGraph& g, const VertexSet& candidates, int k,
                     const EdgeMask& precovered) {
  check_members(g, candidates);
  const int take = std::clamp(k, 0, static_cast<int>(candidates.size()));
  std::vector<std::pair<int, VertexId>> ranked;
  ranked.reserve(candidates.size());
  for (VertexId v : candidates) ranked.emplace_back(-residual_degree(g, v, precovered), v);
  std::partial_sort(ranked.begin(), ranked.begin() + take, ranked.end());
  std::vector<VertexId> out;
  out.reserve(take);
  for (int i = 0; i < take; ++i) out.push_back(ranked[i].second);
  return VertexSet(std::move(out));
}

VertexSet best_k(const BipartiteGraph& g, Side side, int k, const VertexSet& forbidden,
                 const EdgeMask& precovered) {
  return best_among(g, set_difference(g.side_vertices(side), forbidden), k, precovered);
}

BipartiteGraph generate_random(int n1, int n2, double p, std::uint64_t seed) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("generate_random: negative class size");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_random: p must be in [0,1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) {
      if (rng.uniform() < p) edges.push_back({u, v});
    }
  }
  return BipartiteGraph(n1, n2, std::move(edges));
}

BipartiteGraph generate_semiregular(int n1, int n2, int d1, int d2, std::uint64_t seed) {
  if (n1 <= 0 || n2 <= 0 || d1 < 0 || d2 < 0) {
    throw std::invalid_argument("generate_semiregular: sizes must be positive");
  }
  if (static_cast<std::int64_t>(n1) * d1 != static_cast<std::int64_t>(n2) * d2) {
    throw std::invalid_argument("generate_semiregular: n1*d1 must equal n2*d2");
  }
  if (d1 > n2 || d2 > n1) throw std::invalid_argument("generate_semiregular: degree exceeds class size");

  // Stub s of the first class goes to second-class vertex s mod n2: first-class
  // stubs of one vertex are consecutive, so no duplicates, and every
  // second-class vertex receives exactly d2 stubs.
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n1) * d1);
  for (int u = 0; u < n1; ++u) {
    for (int t = 0; t < d1; ++t) edges.push_back({u, (u * d1 + t) % n2});
  }

  // Degree-preserving double-edge swaps, rejecting any that create a duplicate.
  SplitMix64 rng(seed);
  std::vector<std::vector<std::uint8_t>> adj(n1, std::vector<std::uint8_t>(n2, 0));
  for (const Edge& e : edges) adj[e.u][e.v] = 1;
  const std::size_t m = edges.size();
  const std::size_t attempts = m < 2 ? 0 : 10 * m;
  for (std::size_t it = 0; it < attempts; ++it) {
    Edge& a = edges[rng.below(m)];
    Edge& b = edges[rng.below(m)];
    if (a.u == b.u || a.v == b.v) continue;
    if (adj[a.u][b.v] || adj[b.u][a.v]) continue;
    adj[a.u][a.v] = adj[b.u][b.v] = 0;
    std::swap(a.v, b.v);
    adj[a.u][a.v] = adj[b.u][b.v] = 1;
  }
  return BipartiteGraph(n1, n2, std::move(edges));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

BipartiteGraph parse_graph(std::string_view text) {
  bool have_header = false;
  std::int64_t n1 = 0, n2 = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::uint8_t> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 5 || tok[1] != "bkvc") {
        throw ParseError(line_no, "malformed header, expected 'p bkvc <n1> <n2> <m>'");
      }
      n1 = parse_int(tok[2], line_no);
      n2 = parse_int(tok[3], line_no);
      m = parse_int(tok[4], line_no);
      if (n1 < 0 || n2 < 0 || m < 0 || n1 > (1 << 28) || n2 > (1 << 28)) {
        throw ParseError(line_no, "header values out of range");
      }
      if (n1 * n2 <= (std::int64_t{1} << 26)) seen.assign(static_cast<std::size_t>(n1 * n2), 0);
      have_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
      const std::int64_t u = parse_int(tok[1], line_no);
      const std::int64_t v = parse_int(tok[2], line_no);
      if (u < 0 || u >= n1 || v < 0 || v >= n2) {
        throw ParseError(line_no, "edge endpoint out of range");
      }
      if (!seen.empty()) {
        auto& flag = seen[static_cast<std::size_t>(u * n2 + v)];
        if (flag) throw ParseError(line_no, "duplicate edge");
        flag = 1;
      }
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return BipartiteGraph(static_cast<int>(n1), static_cast<int>(n2), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string serialize_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p bkvc " << g.n1() << ' ' << g.n2() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

BipartiteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const BipartiteGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  out << serialize_graph(g);
}

}  // namespace bkvc
