#include "oddcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace oddcolor {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.m_ = static_cast<int>(edges.size());
  std::vector<int> degree(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + g.offsets_[v];
    auto last = g.adjacency_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw GraphError("duplicate edge (" + std::to_string(std::min(v, *dup)) + ", " +
                       std::to_string(std::max(v, *dup)) + ")");
    }
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

long long to_integer(std::string_view field, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw GraphError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(field) + "'");
  }
  return value;
}

struct Header {
  long long n = -1;
  long long m = -1;
};

void check_header(const Header& h, int line_no) {
  if (h.n < 0 || h.m < 0 || h.n > std::numeric_limits<int>::max() ||
      h.m > std::numeric_limits<int>::max()) {
    throw GraphError("line " + std::to_string(line_no) + ": invalid header counts");
  }
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  Header header;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (format == GraphFormat::edgelist) {
      if (fields[0].front() == '#') continue;
      if (fields.size() != 2) {
        throw GraphError("line " + std::to_string(line_no) + ": expected two integers");
      }
      long long a = to_integer(fields[0], line_no);
      long long b = to_integer(fields[1], line_no);
      if (header.n < 0) {
        header = {a, b};
        check_header(header, line_no);
        edges.reserve(header.m);
        continue;
      }
      if (a < 0 || b < 0 || a >= header.n || b >= header.n) {
        throw GraphError("line " + std::to_string(line_no) + ": vertex index out of range");
      }
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } else {
      if (fields[0] == "c") continue;
      if (fields[0] == "p") {
        if (header.n >= 0) throw GraphError("line " + std::to_string(line_no) + ": second header");
        if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col")) {
          throw GraphError("line " + std::to_string(line_no) + ": expected 'p edge n m'");
        }
        header = {to_integer(fields[2], line_no), to_integer(fields[3], line_no)};
        check_header(header, line_no);
        edges.reserve(header.m);
        continue;
      }
      if (fields[0] == "e") {
        if (header.n < 0) throw GraphError("line " + std::to_string(line_no) + ": edge before header");
        if (fields.size() != 3) {
          throw GraphError("line " + std::to_string(line_no) + ": expected 'e u v'");
        }
        long long a = to_integer(fields[1], line_no);
        long long b = to_integer(fields[2], line_no);
        if (a < 1 || b < 1 || a > header.n || b > header.n) {
          throw GraphError("line " + std::to_string(line_no) + ": vertex index out of range");
        }
        edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        continue;
      }
      throw GraphError("line " + std::to_string(line_no) + ": unknown DIMACS line type '" +
                       std::string(fields[0]) + "'");
    }
  }
  if (header.n < 0) throw GraphError("missing header");
  if (static_cast<long long>(edges.size()) != header.m) {
    throw GraphError("header declares " + std::to_string(header.m) + " edges but " +
                     std::to_string(edges.size()) + " were given");
  }
  return Graph::from_edges(static_cast<int>(header.n), edges);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream os;
  if (format == GraphFormat::edgelist) {
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  } else {
    os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  return os.str();
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw GraphError("unknown graph format '" + std::string(name) + "'");
}

GirthResult girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // Any cycle closed from depth d has length at least 2d.
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    for (Vertex v : queue) dist[v] = -1;
  }
  if (best == std::numeric_limits<int>::max()) return {};
  return {best};
}

Rational girth_mad_bound(int g) {
  if (g < 3) throw GraphError("girth bound requires g >= 3");
  return Rational(2 * static_cast<Rational::Int>(g), g - 2);
}

bool is_forest(const Graph& g) {
  // A graph is a forest iff every component with c vertices has c - 1 edges.
  std::vector<int> component(g.num_vertices(), -1);
  long long vertices = 0;
  long long components = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (component[s] >= 0) continue;
    ++components;
    component[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++vertices;
      for (Vertex w : g.neighbors(u)) {
        if (component[w] < 0) {
          component[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return g.num_edges() == vertices - components;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.num_vertices(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (color[s] != 0) continue;
    color[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == 0) {
          color[w] = 3 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::optional<std::vector<Vertex>> cycle_order(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  std::vector<Vertex> order{0};
  Vertex prev = 0;
  Vertex cur = g.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (static_cast<int>(order.size()) > n) return std::nullopt;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::int64_t induced_edge_count(const Graph& g, std::span<const Vertex> subset) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : subset) in[v] = 1;
  std::int64_t twice = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!in[v]) continue;
    for (Vertex w : g.neighbors(v)) twice += in[w];
  }
  return twice / 2;
}

}  // namespace oddcolor
