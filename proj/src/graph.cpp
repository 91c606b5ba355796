#include "homkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace homkit {

bool mask_lex_less(VertexMask a, VertexMask b) {
  while (a != 0 && b != 0) {
    int va = std::countr_zero(a);
    int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // proper prefix sorts first
}

std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

int Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < n; ++v)
    if (labels[v] == label) return v;
  return -1;
}

static std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return labels;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0 || n > kMaxVertices)
    throw parse_error("vertex count out of supported range: " + std::to_string(n));
  Graph g;
  g.n = n;
  g.labels = default_labels(n);
  g.adj.assign(n, 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("vertex index out of range in edge (" + std::to_string(u) +
                        ", " + std::to_string(v) + ")");
    if (u == v) throw parse_error("loop rejected at vertex " + std::to_string(u));
    g.adj[u] |= VertexMask{1} << v;
    g.adj[v] |= VertexMask{1} << u;
  }
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edge_list;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string extra;
      if (!(ls >> n) || n < 0 || (ls >> extra))
        throw parse_error("malformed header at line " + std::to_string(line_no) +
                          ": expected a single vertex count");
      continue;
    }
    int u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw parse_error("malformed edge at line " + std::to_string(line_no) +
                        ": expected \"u v\"");
    edge_list.emplace_back(u, v);
  }
  if (n < 0) throw parse_error("empty input: missing vertex count header");
  return make_graph(n, edge_list);  // duplicates collapse in the bit rows
}

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
}  // namespace

Graph parse_graph6(const std::string& text) {
  // one graph per line; parse the first non-empty line
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) break;
  }
  if (line.empty()) throw parse_error("empty graph6 input");
  if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
  if (line.empty()) throw parse_error("graph6 line holds only a header");

  std::size_t pos = 0;
  if (line[pos] == kG6Hi)
    throw parse_error("graph6 long-form vertex counts exceed the supported scale");
  int n = line[pos] - kG6Lo;
  ++pos;
  if (n < 0) throw parse_error("malformed graph6 vertex count byte");
  if (n > kMaxVertices)
    throw parse_error("graph6 vertex count " + std::to_string(n) +
                      " exceeds the supported scale of " + std::to_string(kMaxVertices));

  Graph g;
  g.n = n;
  g.labels = default_labels(n);
  g.adj.assign(n, 0);

  int bits_needed = n * (n - 1) / 2;
  int bit = 0;
  int cur = 0;
  int mask = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (mask == 0) {
        if (pos >= line.size()) throw parse_error("graph6 data truncated");
        char c = line[pos++];
        if (c < kG6Lo || c > kG6Hi)
          throw parse_error("graph6 byte out of range: " + std::string(1, c));
        cur = c - kG6Lo;
        mask = 0x20;
      }
      if (cur & mask) {
        g.adj[u] |= VertexMask{1} << v;
        g.adj[v] |= VertexMask{1} << u;
      }
      mask >>= 1;
      ++bit;
    }
  }
  (void)bits_needed;
  // padding bits in the final byte must be zero per the format
  while (mask != 0) {
    if (cur & mask) throw parse_error("graph6 nonzero padding bits");
    mask >>= 1;
  }
  if (pos != line.size()) throw parse_error("graph6 trailing bytes after adjacency data");
  return g;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  if (format == GraphFormat::Graph6) return parse_graph6(text);
  // Auto: an edge-list starts with a decimal count (after blank/# lines)
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(start, end - start + 1);
    bool all_digits = !tok.empty() &&
                      std::all_of(tok.begin(), tok.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
    return all_digits ? parse_edge_list(text) : parse_graph6(text);
  }
  throw parse_error("empty input");
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string to_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.n + kG6Lo));
  int cur = 0;
  int bits = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(cur + kG6Lo));
        cur = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((cur << (6 - bits)) + kG6Lo));
  return out;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

static void require_subset(const Graph& g, VertexMask s, const char* what) {
  if ((s & ~g.all_vertices()) != 0)
    throw parse_error(std::string(what) + ": unknown vertex in set");
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  require_subset(g, keep, "induced_subgraph");
  std::vector<int> verts = mask_vertices(keep);
  Graph h;
  h.n = static_cast<int>(verts.size());
  h.labels.reserve(h.n);
  h.adj.assign(h.n, 0);
  for (int i = 0; i < h.n; ++i) h.labels.push_back(g.labels[verts[i]]);
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j)
      if (g.has_edge(verts[i], verts[j])) {
        h.adj[i] |= VertexMask{1} << j;
        h.adj[j] |= VertexMask{1} << i;
      }
  return h;
}

IndependenceStatus independence_status_within(const Graph& g, VertexMask s,
                                              VertexMask universe) {
  require_subset(g, universe, "independence_status");
  if ((s & ~universe) != 0)
    throw parse_error("independence_status: set leaves the universe");
  for (VertexMask m = s; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((g.adj[v] & s) != 0) return IndependenceStatus::NotIndependent;
  }
  for (VertexMask m = universe & ~s; m != 0; m &= m - 1) {
    int w = std::countr_zero(m);
    if ((g.adj[w] & s) == 0) return IndependenceStatus::Independent;
  }
  return IndependenceStatus::MaximalIndependent;
}

IndependenceStatus independence_status(const Graph& g, VertexMask s) {
  return independence_status_within(g, s, g.all_vertices());
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: maximal independent
// sets of g are maximal cliques of its complement.
struct MisEnumerator {
  const Graph& g;
  VertexMask universe;
  std::vector<VertexMask> out;

  VertexMask nonneighbors(int v) const { return universe & ~g.adj[v] & ~(VertexMask{1} << v); }

  void run(VertexMask r, VertexMask p, VertexMask x) {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    // pivot: vertex of p|x maximizing |p & nonneighbors(u)|
    int pivot = -1;
    int best = -1;
    for (VertexMask m = p | x; m != 0; m &= m - 1) {
      int u = std::countr_zero(m);
      int cnt = mask_popcount(p & nonneighbors(u));
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    VertexMask candidates = p & ~nonneighbors(pivot);
    for (VertexMask m = candidates; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      VertexMask vbit = VertexMask{1} << v;
      run(r | vbit, p & nonneighbors(v), x & nonneighbors(v));
      p &= ~vbit;
      x |= vbit;
    }
  }
};

}  // namespace

std::vector<VertexMask> maximal_independent_sets_within(const Graph& g,
                                                        VertexMask universe) {
  require_subset(g, universe, "maximal_independent_sets");
  MisEnumerator e{g, universe, {}};
  e.run(0, universe, 0);
  std::sort(e.out.begin(), e.out.end(), mask_lex_less);
  return e.out;
}

std::vector<VertexMask> maximal_independent_sets(const Graph& g) {
  return maximal_independent_sets_within(g, g.all_vertices());
}

namespace {

struct ColoringSearch {
  const Graph& g;
  int k;
  std::vector<int> color;

  bool assign(int v, int used) {
    if (v == g.n) return true;
    int limit = std::min(used + 1, k);  // new colors in canonical order
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (VertexMask m = g.adj[v] & ((VertexMask{1} << v) - 1); m != 0; m &= m - 1)
        if (color[std::countr_zero(m)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (assign(v + 1, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
  }
};

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.n == 0) return 0;
  for (int k = 1; k <= g.n; ++k) {
    ColoringSearch s{g, k, std::vector<int>(g.n, -1)};
    if (s.assign(0, 0)) return k;
  }
  return g.n;  // unreachable: n colors always suffice
}

}  // namespace homkit
