#include "liftcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "liftcert/rng.hpp"

namespace liftcert {

void Graph::check() const {
  if (n < 0) throw DomainError("graph: negative vertex count");
  for (const Edge& e : edges)
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw DomainError("graph: edge endpoint out of range");
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n, 0);
  for (const Edge& e : edges) {
    d[e.u] += 1;
    d[e.v] += 1;  // a loop contributes 2 to its vertex
  }
  return d;
}

std::vector<std::vector<std::pair<int, int>>> neighbor_lists(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.edges[e].u, v = g.edges[e].v;
    adj[u].push_back({v, e});
    if (u != v) adj[v].push_back({u, e});
  }
  return adj;
}

int component_count(const Graph& g) {
  auto adj = neighbor_lists(g);
  std::vector<char> seen(g.n, 0);
  int comps = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [v, e] : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
    }
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.n <= 1 || component_count(g) == 1; }

namespace {

int parse_int_field(const std::string& tok, int line_no, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
  return value;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  Graph g;
  bool have_header = false;
  long long m_declared = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    if (!have_header) {
      g.n = parse_int_field(a, line_no, "vertex count");
      m_declared = parse_int_field(b, line_no, "edge count");
      if (g.n < 0 || m_declared < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative count");
      have_header = true;
      continue;
    }
    int u = parse_int_field(a, line_no, "endpoint");
    int v = parse_int_field(b, line_no, "endpoint");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
      throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
    g.edges.push_back({u, v});
  }
  if (!have_header) throw ParseError("line 1: missing 'n m' header");
  if (static_cast<long long>(g.edges.size()) != m_declared)
    throw ParseError("edge count mismatch: header declares " + std::to_string(m_declared) +
                     ", file lists " + std::to_string(g.edges.size()));
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph json: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw ParseError("graph json: expected {\"n\":int,\"edges\":[[u,v],...]}");
  Graph g;
  g.n = j["n"].get<int>();
  if (g.n < 0) throw ParseError("graph json: negative vertex count");
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("graph json: each edge must be [u,v]");
    int u = item[0].get<int>(), v = item[1].get<int>();
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
      throw ParseError("graph json: endpoint out of range");
    g.edges.push_back({u, v});
  }
  return g;
}

std::string graph_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges) j["edges"].push_back({e.u, e.v});
  return j.dump();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  for (const Edge& e : g.edges)
    if (e.u == e.v) return std::nullopt;
  auto adj = neighbor_lists(g);
  std::vector<int> side(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [v, e] : adj[u]) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

namespace {

// Shortest u->v distance avoiding edge `skip`; -1 if disconnected.
int bfs_distance_skipping(const std::vector<std::vector<std::pair<int, int>>>& adj, int n,
                          int from, int to, int skip) {
  std::vector<int> dist(n, -1);
  dist[from] = 0;
  std::deque<int> q{from};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == to) return dist[u];
    for (auto [v, e] : adj[u]) {
      if (e == skip || dist[v] != -1) continue;
      dist[v] = dist[u] + 1;
      q.push_back(v);
    }
  }
  return -1;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  for (const Edge& e : g.edges)
    if (e.u == e.v) return 1;
  auto adj = neighbor_lists(g);
  int best = std::numeric_limits<int>::max();
  // Every shortest cycle uses some edge e=(u,v); with e removed its remainder
  // is a u-v path, so girth = min over edges of dist(u,v) + 1.
  for (int e = 0; e < g.edge_count(); ++e) {
    int d = bfs_distance_skipping(adj, g.n, g.edges[e].u, g.edges[e].v, e);
    if (d >= 0) best = std::min(best, d + 1);
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<int8_t> signs_from_index(int m, std::uint64_t index) {
  if (m < 0 || m > 63) throw CapExceeded("signing index math requires 0 <= m <= 63");
  std::vector<int8_t> signs(m, 1);
  for (int j = 0; j < m; ++j)
    if (index >> (m - 1 - j) & 1) signs[j] = -1;
  return signs;
}

std::uint64_t index_from_signs(const std::vector<int8_t>& signs) {
  if (signs.size() > 63) throw CapExceeded("signing index math requires m <= 63");
  std::uint64_t idx = 0;
  for (int8_t s : signs) idx = idx << 1 | (s < 0 ? 1 : 0);
  return idx;
}

SigningEnumerator::SigningEnumerator(const Graph& g, std::uint64_t cap) : base_(&g) {
  int m = g.edge_count();
  if (m > 63 || (std::uint64_t(1) << m) > cap)
    throw CapExceeded("signing enumeration needs cap >= 2^" + std::to_string(m) +
                      " for " + std::to_string(m) + " edges");
  total_ = std::uint64_t(1) << m;
}

Signing SigningEnumerator::at(std::uint64_t index) const {
  return Signing{base_, signs_from_index(base_->edge_count(), index)};
}

std::optional<Signing> SigningEnumerator::next() {
  if (cursor_ >= total_) return std::nullopt;
  return at(cursor_++);
}

Graph apply_lift(const Graph& g, const std::vector<int8_t>& signs) {
  if (static_cast<int>(signs.size()) != g.edge_count())
    throw DomainError("apply_lift: one sign per edge required");
  Graph h;
  h.n = 2 * g.n;
  h.edges.reserve(2 * g.edges.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.edges[e].u, v = g.edges[e].v;
    if (signs[e] > 0) {
      h.edges.push_back({u, v});
      h.edges.push_back({u + g.n, v + g.n});
    } else {
      h.edges.push_back({u, v + g.n});
      h.edges.push_back({u + g.n, v});
    }
  }
  return h;
}

Graph apply_lift(const Signing& s) {
  if (!s.base) throw DomainError("apply_lift: signing has no base graph");
  return apply_lift(*s.base, s.signs);
}

Graph k_lift(const Graph& g, const std::vector<std::vector<int>>& perms, int k) {
  if (k < 1) throw DomainError("k_lift: k must be >= 1");
  if (static_cast<int>(perms.size()) != g.edge_count())
    throw DomainError("k_lift: one permutation per edge required");
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != k) throw DomainError("k_lift: permutation size != k");
    std::vector<char> hit(k, 0);
    for (int x : p) {
      if (x < 0 || x >= k || hit[x]) throw DomainError("k_lift: not a permutation of 0..k-1");
      hit[x] = 1;
    }
  }
  Graph h;
  h.n = k * g.n;
  h.edges.reserve(static_cast<std::size_t>(k) * g.edges.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.edges[e].u, v = g.edges[e].v;
    for (int i = 0; i < k; ++i) h.edges.push_back({u + i * g.n, v + perms[e][i] * g.n});
  }
  return h;
}

Graph union_double(const Graph& g) {
  return apply_lift(g, std::vector<int8_t>(g.edges.size(), 1));
}

Graph times_k2(const Graph& g) {
  return apply_lift(g, std::vector<int8_t>(g.edges.size(), -1));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph r;
  r.n = g.n + h.n;
  r.edges = g.edges;
  for (const Edge& e : h.edges) r.edges.push_back({e.u + g.n, e.v + g.n});
  return r;
}

Graph tensor_product(const Graph& g, const Graph& h) {
  auto mult = [](const Graph& x) {
    std::vector<std::vector<int>> m(x.n, std::vector<int>(x.n, 0));
    for (const Edge& e : x.edges) {
      m[e.u][e.v] += 1;
      if (e.u != e.v) m[e.v][e.u] += 1;
    }
    return m;
  };
  auto mg = mult(g), mh = mult(h);
  Graph r;
  r.n = g.n * h.n;
  for (int a = 0; a < r.n; ++a) {
    int u = a / h.n, x = a % h.n;
    for (int b = a; b < r.n; ++b) {
      int v = b / h.n, y = b % h.n;
      int count = mg[u][v] * mh[x][y];
      for (int c = 0; c < count; ++c) r.edges.push_back({a, b});
    }
  }
  return r;
}

Graph add_loops(const Graph& g) {
  Graph r = g;
  for (int v = 0; v < g.n; ++v) r.edges.push_back({v, v});
  return r;
}

Graph subdivision(const Graph& g) {
  Graph r;
  r.n = g.n + g.edge_count();
  r.edges.reserve(2 * g.edges.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    r.edges.push_back({g.edges[e].u, g.n + e});
    r.edges.push_back({g.n + e, g.edges[e].v});
  }
  return r;
}

namespace {

constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

int girth_or_inf(const Graph& g) {
  auto got = girth(g);
  return got ? *got : kInfiniteGirth;
}

std::optional<int> boxed(int girth_value) {
  if (girth_value == kInfiniteGirth) return std::nullopt;
  return girth_value;
}

}  // namespace

GirthBoostResult girth_boost(const Graph& g, int target, std::uint64_t budget,
                             std::uint64_t seed, std::uint64_t exhaustive_cap) {
  g.check();
  if (!is_connected(g)) throw DomainError("girth_boost: input graph must be connected");
  if (budget == 0) throw DomainError("girth_boost: budget must be positive");

  GirthBoostResult result;
  Graph current = g;
  int current_girth = girth_or_inf(current);
  result.sequence.push_back(current);
  result.girths.push_back(boxed(current_girth));

  Rng rng(seed);
  while (current_girth < target) {
    int m = current.edge_count();
    bool exhaustive = m <= 63 && (std::uint64_t(1) << m) <= exhaustive_cap;
    Graph best_lift;
    int best_girth = current_girth;
    bool improved = false;
    if (exhaustive) {
      std::uint64_t total = std::uint64_t(1) << m;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Graph lift = apply_lift(current, signs_from_index(m, idx));
        int gv = girth_or_inf(lift);
        if (gv > best_girth) {  // strict: lex-smallest signing wins ties
          best_girth = gv;
          best_lift = std::move(lift);
          improved = true;
          if (best_girth >= target && best_girth == kInfiniteGirth) break;
        }
      }
      if (!improved) {
        result.flagged = true;
        break;
      }
    } else {
      std::uint64_t dry_rounds = 0;
      while (!improved && dry_rounds < budget) {
        for (std::uint64_t t = 0; t < budget; ++t) {
          std::vector<int8_t> signs(m);
          for (int j = 0; j < m; ++j) signs[j] = rng.below(2) ? -1 : 1;
          Graph lift = apply_lift(current, signs);
          int gv = girth_or_inf(lift);
          if (gv > best_girth) {  // first strict improvement of the round wins
            best_girth = gv;
            best_lift = std::move(lift);
            improved = true;
          }
        }
        if (!improved) ++dry_rounds;
      }
      if (!improved) {
        result.flagged = true;
        break;
      }
    }
    current = std::move(best_lift);
    current_girth = best_girth;
    result.sequence.push_back(current);
    result.girths.push_back(boxed(current_girth));
  }
  result.reached = current_girth >= target;
  return result;
}

}  // namespace liftcert
