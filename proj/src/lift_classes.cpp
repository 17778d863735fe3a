#include "liftcert/lift_classes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "liftcert/errors.hpp"

namespace liftcert {

int entry_sign(const Scalar& s, double tol) {
  if (s.is_exact()) return s.sign();
  double f = s.flt();
  if (std::abs(f) <= tol) return 0;
  return f > 0 ? 1 : -1;
}

namespace {

Scalar minor2(const SpinModel& m, int i, int j, int r, int s) {
  return m.A(i, r) * m.A(j, s) - m.A(i, s) * m.A(j, r);
}

bool all_minor_signs(const SpinModel& m, int forbidden) {
  for (int i = 0; i < m.q; ++i)
    for (int j = i + 1; j < m.q; ++j)
      for (int r = 0; r < m.q; ++r)
        for (int s = r + 1; s < m.q; ++s)
          if (entry_sign(minor2(m, i, j, r, s)) == forbidden) return false;
  return true;
}

}  // namespace

bool tp2_check(const SpinModel& m) { return all_minor_signs(m, -1); }
bool tn2_check(const SpinModel& m) { return all_minor_signs(m, 1); }

PairMatrices build_pair_matrices(const SpinModel& m) {
  m.check();
  const int q = m.q;
  const int n = q * q;
  PairMatrices pm;
  pm.q = q;
  pm.order = pair_order(q);
  pm.a_eq = ScalarMat(n);
  pm.a_cross = ScalarMat(n);
  pm.e_mat = ScalarMat(n);
  pm.d_mat = ScalarMat(n);
  Scalar half = m.is_exact() ? Scalar::exact(Rational(1) / 2) : Scalar::real(0.5);
  for (int r = 0; r < n; ++r) {
    auto [i, j] = pm.order[r];
    for (int c = 0; c < n; ++c) {
      auto [k, l] = pm.order[c];
      pm.a_eq.at(r, c) = m.A(i, k) * m.A(j, l);
      pm.a_cross.at(r, c) = m.A(i, l) * m.A(j, k);
      pm.e_mat.at(r, c) = (pm.a_eq.at(r, c) + pm.a_cross.at(r, c)) * half;
      pm.d_mat.at(r, c) = (pm.a_eq.at(r, c) - pm.a_cross.at(r, c)) * half;
    }
  }
  const int pairs = q * (q - 1) / 2;
  pm.d1 = ScalarMat(pairs);
  for (int r = 0; r < pairs; ++r)
    for (int c = 0; c < pairs; ++c) pm.d1.at(r, c) = pm.d_mat.at(q + r, q + c);
  return pm;
}

namespace {

// Union-find tracking each node's sign parity relative to its root.
struct ParityUf {
  std::vector<int> parent;
  std::vector<int> parity;

  explicit ParityUf(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  }

  bool unite(int x, int y, int want_parity) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == want_parity;
    parent[rx] = ry;
    parity[rx] = px ^ py ^ want_parity;
    return true;
  }
};

}  // namespace

std::optional<std::vector<int>> sign_switchable(const ScalarMat& d, SwitchDirection direction) {
  const int n = d.n;
  const int want = direction == SwitchDirection::NonNeg ? 1 : -1;
  for (int i = 0; i < n; ++i)
    if (entry_sign(d.at(i, i)) == -want) return std::nullopt;
  ParityUf uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int s = entry_sign(d.at(i, j));
      if (s == 0) continue;
      // Need sigma_i sigma_j = want * s.
      if (!uf.unite(i, j, want * s == 1 ? 0 : 1)) return std::nullopt;
    }
  // Canonical witness: the lowest-index member of every component gets +1.
  std::vector<int> sigma(n, 1);
  std::vector<int> flip(n, 0);
  for (int i = 0; i < n; ++i) {
    auto [root, parity] = uf.find(i);
    int raw = parity == 0 ? 1 : -1;
    if (flip[root] == 0) flip[root] = raw;
    sigma[i] = raw * flip[root];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) assert(sigma[i] * sigma[j] * entry_sign(d.at(i, j)) != -want);
  return sigma;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ClassACertified: return "ClassA_certified";
    case Verdict::ClassBCertified: return "ClassB_certified";
    case Verdict::Both: return "Both";
    case Verdict::Unknown: return "Unknown";
  }
  throw DomainError("verdict_name: bad verdict");
}

namespace {

// +1 on diagonal pairs, s1 on increasing pairs, -s1 mirrored on decreasing
// ones; the crossed blocks of d_mat flip sign together, so the extension
// certifies the full matrix whenever s1 certifies d1.
std::vector<int> extend_to_pairs(int q, const std::vector<int>& s1) {
  const int pairs = q * (q - 1) / 2;
  std::vector<int> s(static_cast<std::size_t>(q) * q, 1);
  for (int r = 0; r < pairs; ++r) {
    s[q + r] = s1[r];
    s[q + pairs + r] = -s1[r];
  }
  return s;
}

}  // namespace

Classification classify(const SpinModel& m) {
  PairMatrices pm = build_pair_matrices(m);
  auto pos = sign_switchable(pm.d1, SwitchDirection::NonNeg);
  auto neg = sign_switchable(pm.d1, SwitchDirection::NonPos);
  Classification out;
  if (pos && neg)
    out.verdict = Verdict::Both;
  else if (pos)
    out.verdict = Verdict::ClassACertified;
  else if (neg)
    out.verdict = Verdict::ClassBCertified;
  else
    return out;
  const std::vector<int>& s1 = pos ? *pos : *neg;
  out.s_reduced = s1;
  out.s_full = extend_to_pairs(m.q, s1);
  [[maybe_unused]] const int want = pos ? 1 : -1;
  const int n = m.q * m.q;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      assert((*out.s_full)[r] * (*out.s_full)[c] * entry_sign(pm.d_mat.at(r, c)) != -want);
  return out;
}

namespace {

using BitMat = std::vector<std::vector<int>>;

BitMat permuted_bits(const SpinModel& m, const std::vector<int>& perm) {
  const int q = m.q;
  BitMat b(q, std::vector<int>(q, 0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) b[i][j] = m.A(perm[i], perm[j]).is_zero() ? 0 : 1;
  return b;
}

std::optional<StaircaseResult> try_loop_threshold(const BitMat& b) {
  const int q = static_cast<int>(b.size());
  std::vector<int> prefix(q);
  for (int i = 0; i < q; ++i) {
    int r = 0;
    while (r < q && b[i][r] == 1) ++r;
    for (int j = r; j < q; ++j)
      if (b[i][j] == 1) return std::nullopt;
    prefix[i] = r;
    if (i > 0 && prefix[i] > prefix[i - 1]) return std::nullopt;
  }
  StaircaseResult res;
  res.weights.resize(q);
  for (int i = 0; i < q; ++i) res.weights[i] = q - prefix[i];
  res.alpha = -1;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < prefix[i]; ++j)
      res.alpha = std::max(res.alpha, res.weights[i] + res.weights[j]);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if ((res.weights[i] + res.weights[j] <= res.alpha) != (b[i][j] == 1)) return std::nullopt;
  return res;
}

// Difference constraints w_to - w_from <= bound, solved by Bellman-Ford
// from an implicit all-zero source; integer distances are the weights.
struct DiffConstraint {
  int from, to;
  long long bound;
};

std::optional<std::vector<long long>> solve_difference(int q,
                                                       const std::vector<DiffConstraint>& cons) {
  std::vector<long long> dist(q, 0);
  for (int round = 0; round <= q; ++round) {
    bool changed = false;
    for (const DiffConstraint& c : cons)
      if (dist[c.from] + c.bound < dist[c.to]) {
        dist[c.to] = dist[c.from] + c.bound;
        changed = true;
      }
    if (!changed) break;
    if (round == q) return std::nullopt;  // negative cycle: infeasible
  }
  long long low = *std::min_element(dist.begin(), dist.end());
  for (long long& v : dist) v -= low;
  return dist;
}

std::optional<StaircaseResult> try_thick_path(const BitMat& b) {
  const int q = static_cast<int>(b.size());
  std::vector<int> lo(q), hi(q);
  for (int i = 0; i < q; ++i) {
    if (b[i][i] != 1) return std::nullopt;  // |w_i - w_i| = 0 <= alpha always
    int l = 0;
    while (b[i][l] == 0) ++l;
    int u = q - 1;
    while (b[i][u] == 0) --u;
    for (int j = l; j <= u; ++j)
      if (b[i][j] != 1) return std::nullopt;
    if (l > i || u < i) return std::nullopt;
    lo[i] = l;
    hi[i] = u;
    if (i > 0 && (lo[i] < lo[i - 1] || hi[i] < hi[i - 1])) return std::nullopt;
  }
  for (long long alpha = 0; alpha <= static_cast<long long>(q) * q; ++alpha) {
    std::vector<DiffConstraint> cons;
    for (int i = 0; i + 1 < q; ++i) cons.push_back({i + 1, i, 0});  // w non-decreasing
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) {
        if (b[i][j] == 1)
          cons.push_back({i, j, alpha});  // w_j - w_i <= alpha
        else
          cons.push_back({j, i, -(alpha + 1)});  // w_j - w_i >= alpha + 1
      }
    auto w = solve_difference(q, cons);
    if (!w) continue;
    bool ok = true;
    for (int i = 0; i < q && ok; ++i)
      for (int j = 0; j < q && ok; ++j)
        if ((std::abs((*w)[i] - (*w)[j]) <= alpha) != (b[i][j] == 1)) ok = false;
    if (!ok) continue;
    StaircaseResult res;
    res.weights = *w;
    res.alpha = alpha;
    return res;
  }
  return std::nullopt;
}

}  // namespace

std::optional<StaircaseResult> staircase_recognize(const SpinModel& m, StairKind kind) {
  if (m.q > 8 || !m.zero_one()) return std::nullopt;
  std::vector<int> perm(m.q);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    BitMat b = permuted_bits(m, perm);
    auto res = kind == StairKind::LoopThreshold ? try_loop_threshold(b) : try_thick_path(b);
    if (res) {
      res->ordering = perm;
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace liftcert
