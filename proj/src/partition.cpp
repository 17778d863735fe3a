#include "liftcert/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>

namespace liftcert {

namespace {

struct Plan {
  int n = 0, q = 0;
  std::vector<int> order;                 // position -> vertex
  std::vector<std::vector<int>> earlier;  // per position: earlier positions, one per edge
  std::vector<int> loop_count;            // per position
  int prefix_len = 0;
  std::uint64_t prefix_count = 1;
};

Plan make_plan(const Graph& g, int q) {
  Plan pl;
  pl.n = g.n;
  pl.q = q;
  pl.order.reserve(g.n);
  std::vector<int> pos_of(g.n, -1);
  auto adj = neighbor_lists(g);
  for (int s = 0; s < g.n; ++s) {
    if (pos_of[s] != -1) continue;
    std::deque<int> queue{s};
    pos_of[s] = static_cast<int>(pl.order.size());
    pl.order.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, e] : adj[u])
        if (pos_of[v] == -1) {
          pos_of[v] = static_cast<int>(pl.order.size());
          pl.order.push_back(v);
          queue.push_back(v);
        }
    }
  }
  pl.earlier.assign(g.n, {});
  pl.loop_count.assign(g.n, 0);
  for (const Edge& e : g.edges) {
    int pu = pos_of[e.u], pv = pos_of[e.v];
    if (pu == pv)
      pl.loop_count[pu] += 1;
    else
      pl.earlier[std::max(pu, pv)].push_back(std::min(pu, pv));
  }
  // Parallel split point: enough prefixes to load threads, few enough that
  // per-prefix bookkeeping stays cheap.
  while (pl.prefix_len < pl.n && pl.prefix_count * q <= 4096) {
    pl.prefix_count *= q;
    pl.prefix_len += 1;
  }
  return pl;
}

inline bool value_is_zero(unsigned long long v) { return v == 0; }
inline bool value_is_zero(double v) { return v == 0.0; }
inline bool value_is_zero(const Rational& v) { return v.is_zero(); }

template <class T>
struct Tables {
  int q = 0;
  std::vector<T> a;
  std::vector<T> nu;
};

// Multiplies the factors vertex `pos` adds for color c; false when zero.
template <class T>
bool apply_vertex(const Plan& pl, const Tables<T>& tb, const std::vector<int>& color, int pos,
                  int c, T& value) {
  value *= tb.nu[c];
  for (int s : pl.earlier[pos]) {
    value *= tb.a[static_cast<std::size_t>(c) * tb.q + color[s]];
    if (value_is_zero(value)) return false;
  }
  for (int k = 0; k < pl.loop_count[pos]; ++k) {
    value *= tb.a[static_cast<std::size_t>(c) * tb.q + c];
    if (value_is_zero(value)) return false;
  }
  return !value_is_zero(value);
}

template <class T>
void dfs_sum(const Plan& pl, const Tables<T>& tb, std::vector<int>& color, int pos,
             const T& partial, T& acc) {
  if (pos == pl.n) {
    acc += partial;
    return;
  }
  for (int c = 0; c < tb.q; ++c) {
    T value = partial;
    if (!apply_vertex(pl, tb, color, pos, c, value)) continue;
    color[pos] = c;
    dfs_sum(pl, tb, color, pos + 1, value, acc);
  }
}

template <class T>
T run_kernel(const Plan& pl, const Tables<T>& tb) {
  const std::int64_t prefixes = static_cast<std::int64_t>(pl.prefix_count);
  std::vector<T> partials(prefixes, T(0));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t p = 0; p < prefixes; ++p) {
    std::vector<int> color(pl.n, 0);
    T value = T(1);
    bool alive = true;
    std::uint64_t rest = static_cast<std::uint64_t>(p);
    for (int pos = pl.prefix_len - 1; pos >= 0; --pos) {
      color[pos] = static_cast<int>(rest % pl.q);
      rest /= pl.q;
    }
    for (int pos = 0; pos < pl.prefix_len && alive; ++pos)
      alive = apply_vertex(pl, tb, color, pos, color[pos], value);
    if (alive) dfs_sum(pl, tb, color, pl.prefix_len, value, partials[p]);
  }
  T total(0);
  for (std::int64_t p = 0; p < prefixes; ++p) total += partials[p];  // fixed merge order
  return total;
}

BigInt bigint_pow(BigInt base, int exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

// q^v as BigInt for the cap check and cost estimate.
BigInt assignment_count(int q, int v) { return bigint_pow(BigInt(q), v); }

BigInt exact_entry_lcm(const SpinModel& m) {
  BigInt lcm = 1;
  auto fold = [&](const Scalar& s) {
    BigInt den = boost::multiprecision::denominator(s.rat());
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  };
  for (const Scalar& s : m.a) fold(s);
  for (const Scalar& s : m.nu) fold(s);
  return lcm;
}

BigInt scaled_integer(const Scalar& s, const BigInt& scale) {
  Rational r = s.rat() * Rational(scale);
  return boost::multiprecision::numerator(r);  // denominator is 1 by construction
}

}  // namespace

Scalar partition_value(const Graph& g, const SpinModel& m, const PartitionCaps& caps) {
  g.check();
  m.check();
  BigInt work = assignment_count(m.q, g.n);
  if (work > caps.assignments)
    throw CapExceeded("partition_value: " + std::to_string(m.q) + "^" + std::to_string(g.n) +
                      " = " + work.str() + " assignments exceeds cap " +
                      std::to_string(caps.assignments));
  Plan pl = make_plan(g, m.q);

  if (!m.is_exact()) {
    Tables<double> tb;
    tb.q = m.q;
    for (const Scalar& s : m.a) tb.a.push_back(s.flt());
    for (const Scalar& s : m.nu) tb.nu.push_back(s.flt());
    return Scalar::real(run_kernel(pl, tb));
  }

  // Exact path: scale to integers, run in machine words when the worst-case
  // sum provably fits, else fall back to rationals.
  BigInt scale = exact_entry_lcm(m);
  BigInt max_a = 0, max_nu = 0;
  for (const Scalar& s : m.a) max_a = std::max(max_a, scaled_integer(s, scale));
  for (const Scalar& s : m.nu) max_nu = std::max(max_nu, scaled_integer(s, scale));
  BigInt bound = work * bigint_pow(std::max(max_a, BigInt(1)), g.edge_count()) *
                 bigint_pow(std::max(max_nu, BigInt(1)), g.n);
  if (bound < (BigInt(1) << 62)) {
    Tables<unsigned long long> tb;
    tb.q = m.q;
    for (const Scalar& s : m.a)
      tb.a.push_back(scaled_integer(s, scale).convert_to<unsigned long long>());
    for (const Scalar& s : m.nu)
      tb.nu.push_back(scaled_integer(s, scale).convert_to<unsigned long long>());
    unsigned long long scaled_sum = run_kernel(pl, tb);
    Rational z(BigInt(scaled_sum), bigint_pow(scale, g.edge_count() + g.n));
    return Scalar::exact(z);
  }
  Tables<Rational> tb;
  tb.q = m.q;
  for (const Scalar& s : m.a) tb.a.push_back(s.rat());
  for (const Scalar& s : m.nu) tb.nu.push_back(s.rat());
  return Scalar::exact(run_kernel(pl, tb));
}

Scalar hom_count(const Graph& g, const Graph& h, const PartitionCaps& caps) {
  return partition_value(g, model_from_graph(h), caps);
}

Scalar hom_cycle_oracle(int n, const SpinModel& m) {
  if (n < 1) throw DomainError("hom_cycle_oracle: n >= 1 required");
  if (!m.unit_weights()) throw DomainError("hom_cycle_oracle: unit vertex weights required");
  const int q = m.q;
  std::vector<Scalar> power = m.a;
  for (int step = 1; step < n; ++step) {
    std::vector<Scalar> next(static_cast<std::size_t>(q) * q, m.a[0].is_exact()
                                                                  ? Scalar(0)
                                                                  : Scalar::real(0.0));
    for (int i = 0; i < q; ++i)
      for (int k = 0; k < q; ++k) {
        const Scalar& pik = power[static_cast<std::size_t>(i) * q + k];
        if (pik.is_zero()) continue;
        for (int j = 0; j < q; ++j)
          next[static_cast<std::size_t>(i) * q + j] += pik * m.a[static_cast<std::size_t>(k) * q + j];
      }
    power = std::move(next);
  }
  Scalar trace = m.a[0].is_exact() ? Scalar(0) : Scalar::real(0.0);
  for (int i = 0; i < q; ++i) trace += power[static_cast<std::size_t>(i) * q + i];
  return trace;
}

CountVector independent_set_counts(const Graph& g) {
  g.check();
  if (g.n > 30) throw CapExceeded("independent_set_counts: v <= 30 required (2^v scan)");
  std::vector<std::uint32_t> adj(g.n, 0);
  for (const Edge& e : g.edges) {
    adj[e.u] |= std::uint32_t(1) << e.v;  // a loop marks the vertex itself
    adj[e.v] |= std::uint32_t(1) << e.u;
  }
  std::vector<unsigned long long> by_size(g.n + 1, 0);
  const std::uint32_t total = std::uint32_t(1) << g.n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (adj[u] & mask) {
        ok = false;
        break;
      }
    }
    if (ok) by_size[std::popcount(mask)] += 1;
  }
  CountVector counts;
  for (unsigned long long c : by_size) counts.push_back(BigInt(c));
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

CountVector matching_counts(const Graph& g) {
  g.check();
  const int m = g.edge_count();
  if (m > 30) throw CapExceeded("matching_counts: m <= 30 required (2^m scan)");
  if (g.n > 64) throw CapExceeded("matching_counts: v <= 64 required");
  std::vector<std::uint64_t> cover(m);
  std::vector<char> loop(m);
  for (int e = 0; e < m; ++e) {
    cover[e] = (std::uint64_t(1) << g.edges[e].u) | (std::uint64_t(1) << g.edges[e].v);
    loop[e] = g.is_loop(e);
  }
  std::vector<unsigned long long> by_size(m + 1, 0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      int e = std::countr_zero(rest);
      if (loop[e] || (cover[e] & used)) {
        ok = false;
        break;
      }
      used |= cover[e];
    }
    if (ok) by_size[std::popcount(mask)] += 1;
  }
  CountVector counts;
  for (unsigned long long c : by_size) counts.push_back(BigInt(c));
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

Scalar eval_counts(const CountVector& counts, const Scalar& x) {
  if (x.is_exact()) {
    Rational acc = 0;
    for (std::size_t k = counts.size(); k-- > 0;) acc = acc * x.rat() + Rational(counts[k]);
    return Scalar::exact(acc);
  }
  double acc = 0;
  for (std::size_t k = counts.size(); k-- > 0;)
    acc = acc * x.flt() + counts[k].convert_to<double>();
  return Scalar::real(acc);
}

Scalar eval_I(const Graph& g, const Scalar& lambda) {
  return eval_counts(independent_set_counts(g), lambda);
}

Graph delete_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw DomainError("delete_edge: bad edge index");
  Graph r;
  r.n = g.n;
  r.edges.reserve(g.edges.size() - 1);
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != e) r.edges.push_back(g.edges[i]);
  return r;
}

Graph contract_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw DomainError("contract_edge: bad edge index");
  if (g.is_loop(e)) return delete_edge(g, e);
  int lo = std::min(g.edges[e].u, g.edges[e].v);
  int hi = std::max(g.edges[e].u, g.edges[e].v);
  auto relabel = [&](int x) { return x == hi ? lo : (x > hi ? x - 1 : x); };
  Graph r;
  r.n = g.n - 1;
  r.edges.reserve(g.edges.size() - 1);
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != e) r.edges.push_back({relabel(g.edges[i].u), relabel(g.edges[i].v)});
  return r;
}

namespace {

void check_rc_params(const RCParams& p) {
  if (p.q.is_exact() != p.w.is_exact())
    throw DomainError("random_cluster: q and w must share a tag (both exact or both float)");
}

Scalar scalar_one_like(const Scalar& s) { return s.is_exact() ? Scalar(1) : Scalar::real(1.0); }

Scalar scalar_int_pow(const Scalar& base, int exp) {
  Scalar out = scalar_one_like(base);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Scalar rc_recurse(const Graph& g, const RCParams& p, std::uint64_t& budget) {
  if (budget == 0)
    throw CapExceeded("random_cluster: expansion budget exhausted (raise expansions cap)");
  --budget;
  Scalar factor = scalar_one_like(p.q);
  Graph cur = g;
  // Loops first: each contributes a (1+w) factor.
  int loops = 0;
  for (int e = 0; e < cur.edge_count(); ++e) loops += cur.is_loop(e);
  if (loops > 0) {
    Scalar one_plus_w = scalar_one_like(p.w) + p.w;
    factor = scalar_int_pow(one_plus_w, loops);
    Graph stripped;
    stripped.n = cur.n;
    for (int e = 0; e < cur.edge_count(); ++e)
      if (!cur.is_loop(e)) stripped.edges.push_back(cur.edges[e]);
    cur = std::move(stripped);
  }
  if (cur.edge_count() == 0) return factor * scalar_int_pow(p.q, cur.n);
  int split = cur.edge_count() - 1;  // highest-index non-loop edge
  Scalar contracted = rc_recurse(contract_edge(cur, split), p, budget);
  Scalar deleted = rc_recurse(delete_edge(cur, split), p, budget);
  return factor * (p.w * contracted + deleted);
}

}  // namespace

Scalar random_cluster(const Graph& g, const RCParams& p, const PartitionCaps& caps) {
  g.check();
  check_rc_params(p);
  std::uint64_t budget = caps.expansions;
  return rc_recurse(g, p, budget);
}

std::pair<Scalar, Scalar> edge_probabilities(const Graph& g, const RCParams& p, int e,
                                             const PartitionCaps& caps) {
  if (e < 0 || e >= g.edge_count()) throw DomainError("edge_probabilities: bad edge index");
  Scalar z = random_cluster(g, p, caps);
  if (z.is_zero()) throw DomainError("edge_probabilities: Z = 0");
  Scalar z_del = random_cluster(delete_edge(g, e), p, caps);
  Scalar z_con = random_cluster(contract_edge(g, e), p, caps);
  return {z_del / z, p.w * z_con / z};
}

FkgReport fkg_check(const Graph& g, const RCParams& p, int e, int f, const PartitionCaps& caps) {
  if (e == f) throw DomainError("fkg_check: edges must be distinct");
  if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count())
    throw DomainError("fkg_check: bad edge index");
  auto shifted = [](int edge, int removed) { return edge > removed ? edge - 1 : edge; };

  Graph del_e = delete_edge(g, e);
  Graph con_e = contract_edge(g, e);
  int f_after_e = shifted(f, e);
  Scalar z_del_both = random_cluster(delete_edge(del_e, f_after_e), p, caps);
  Scalar z_con_both = random_cluster(contract_edge(con_e, f_after_e), p, caps);
  Scalar z_del_con = random_cluster(contract_edge(del_e, f_after_e), p, caps);
  Scalar z_con_del = random_cluster(delete_edge(con_e, f_after_e), p, caps);

  FkgReport report{.lhs = z_del_both * z_con_both,
                   .rhs = z_del_con * z_con_del,
                   .product_ok = false,
                   .p_e = Scalar(0),
                   .p_f = Scalar(0),
                   .p_both = Scalar(0),
                   .prob_ok = false};
  report.product_ok = report.lhs >= report.rhs;

  Scalar z = random_cluster(g, p, caps);
  if (z.is_zero()) throw DomainError("fkg_check: Z = 0");
  report.p_e = p.w * random_cluster(con_e, p, caps) / z;
  report.p_f = p.w * random_cluster(contract_edge(g, f), p, caps) / z;
  report.p_both = p.w * p.w * z_con_both / z;
  report.prob_ok = report.p_e * report.p_f <= report.p_both;
  return report;
}

Scalar tutte_eval(const Graph& g, const Scalar& x, const Scalar& y, const PartitionCaps& caps) {
  Scalar one_x = scalar_one_like(x), one_y = scalar_one_like(y);
  if (x == one_x || y == one_y) throw DomainError("tutte_eval: x = 1 or y = 1 not supported");
  if (x.is_exact() != y.is_exact()) throw DomainError("tutte_eval: x and y must share a tag");
  Scalar xm = x - one_x, ym = y - one_y;
  Scalar z = random_cluster(g, RCParams{xm * ym, ym}, caps);
  int k = component_count(g);
  for (int i = 0; i < k; ++i) z = z / xm;
  for (int i = 0; i < g.n; ++i) z = z / ym;
  return z;
}

}  // namespace liftcert
