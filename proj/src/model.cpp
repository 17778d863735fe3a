#include "liftcert/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"

namespace liftcert {

namespace {

bool scalar_is_one(const Scalar& s) {
  return s.is_exact() ? s.rat() == 1 : s.flt() == 1.0;
}

bool scalar_zero_or_one(const Scalar& s) {
  if (s.is_exact()) return s.rat() == 0 || s.rat() == 1;
  return s.flt() == 0.0 || s.flt() == 1.0;
}

// One float entry anywhere makes the whole model float.
void unify_tags(SpinModel& m) {
  bool any_float = false;
  for (const Scalar& s : m.a) any_float |= !s.is_exact();
  for (const Scalar& s : m.nu) any_float |= !s.is_exact();
  if (!any_float) return;
  for (Scalar& s : m.a)
    if (s.is_exact()) s = Scalar::real(s.to_double());
  for (Scalar& s : m.nu)
    if (s.is_exact()) s = Scalar::real(s.to_double());
}

}  // namespace

bool SpinModel::is_exact() const {
  for (const Scalar& s : a)
    if (!s.is_exact()) return false;
  for (const Scalar& s : nu)
    if (!s.is_exact()) return false;
  return true;
}

bool SpinModel::zero_one() const {
  return std::all_of(a.begin(), a.end(), scalar_zero_or_one);
}

bool SpinModel::unit_weights() const {
  return std::all_of(nu.begin(), nu.end(), scalar_is_one);
}

void SpinModel::check() const {
  if (q < 1) throw DomainError("model: q must be >= 1");
  if (a.size() != static_cast<std::size_t>(q) * q || nu.size() != static_cast<std::size_t>(q))
    throw DomainError("model: wrong matrix or weight size");
  bool tag = a[0].is_exact();
  for (const Scalar& s : a)
    if (s.is_exact() != tag) throw DomainError("model: mixed exact/float entries");
  for (const Scalar& s : nu)
    if (s.is_exact() != tag) throw DomainError("model: mixed exact/float entries");
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      if (A(i, j).sign() < 0) throw DomainError("model: negative matrix entry");
      if (A(i, j) != A(j, i)) throw DomainError("model: matrix not symmetric");
    }
  for (const Scalar& s : nu)
    if (s.sign() <= 0) throw DomainError("model: vertex weights must be positive");
}

SpinModel ind_model() {
  SpinModel m;
  m.q = 2;
  m.a = {Scalar(1), Scalar(1), Scalar(1), Scalar(0)};
  m.nu = {Scalar(1), Scalar(1)};
  return m;
}

SpinModel wr_model() {
  SpinModel m;
  m.q = 3;
  m.a = {Scalar(1), Scalar(1), Scalar(0),
         Scalar(1), Scalar(1), Scalar(1),
         Scalar(0), Scalar(1), Scalar(1)};
  m.nu = {Scalar(1), Scalar(1), Scalar(1)};
  return m;
}

SpinModel ising_model(double beta, double field) {
  SpinModel m;
  m.q = 2;
  Scalar hi = Scalar::real(std::exp(beta)), lo = Scalar::real(std::exp(-beta));
  m.a = {hi, lo, lo, hi};
  m.nu = {Scalar::real(std::exp(field)), Scalar::real(std::exp(-field))};
  return m;
}

SpinModel potts_model(int q, const Scalar& w) {
  if (q < 1) throw DomainError("potts: q must be a positive integer");
  if (w.sign() < 0) throw DomainError("potts: w must be >= 0");
  SpinModel m;
  m.q = q;
  m.a.assign(static_cast<std::size_t>(q) * q, Scalar(1));
  const Scalar one = w.is_exact() ? Scalar(1) : Scalar::real(1.0);
  for (int i = 0; i < q; ++i) m.A(i, i) = one + w;
  m.nu.assign(q, Scalar(1));
  unify_tags(m);
  return m;
}

namespace {

std::vector<std::string> split_args(const std::string& inner) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : inner) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

SpinModel named_model(const std::string& spec) {
  if (spec == "ind") return ind_model();
  if (spec == "wr") return wr_model();
  auto open = spec.find('(');
  if (open != std::string::npos && spec.back() == ')') {
    std::string name = spec.substr(0, open);
    auto args = split_args(spec.substr(open + 1, spec.size() - open - 2));
    if (name == "ising" && (args.size() == 1 || args.size() == 2)) {
      try {
        double beta = std::stod(args[0]);
        double field = args.size() == 2 ? std::stod(args[1]) : 0.0;
        return ising_model(beta, field);
      } catch (const std::exception&) {
        throw ParseError("bad ising parameters in '" + spec + "'");
      }
    }
    if (name == "potts" && args.size() == 2) {
      int q = 0;
      try {
        std::size_t pos = 0;
        q = std::stoi(args[0], &pos);
        if (pos != args[0].size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad potts q in '" + spec + "'");
      }
      return potts_model(q, Scalar::parse_exact(args[1]));
    }
  }
  throw ParseError("unknown model '" + spec + "' (want ind, wr, ising(beta[,field]), potts(q,w))");
}

SpinModel model_from_graph(const Graph& h) {
  h.check();
  if (h.n < 1) throw DomainError("model_from_graph: graph needs at least one vertex");
  SpinModel m;
  m.q = h.n;
  m.a.assign(static_cast<std::size_t>(h.n) * h.n, Scalar(0));
  for (const Edge& e : h.edges) {
    m.A(e.u, e.v) += Scalar(1);
    if (e.u != e.v) m.A(e.v, e.u) += Scalar(1);
  }
  m.nu.assign(h.n, Scalar(1));
  return m;
}

SpinModel blow_up(const SpinModel& m, const std::vector<int>& mult) {
  if (static_cast<int>(mult.size()) != m.q) throw DomainError("blow_up: one multiplicity per index");
  for (int c : mult)
    if (c < 1) throw DomainError("blow_up: multiplicities must be >= 1");
  SpinModel r;
  r.q = std::accumulate(mult.begin(), mult.end(), 0);
  std::vector<int> owner;
  for (int i = 0; i < m.q; ++i) owner.insert(owner.end(), mult[i], i);
  r.a.reserve(static_cast<std::size_t>(r.q) * r.q);
  for (int i = 0; i < r.q; ++i)
    for (int j = 0; j < r.q; ++j) r.a.push_back(m.A(owner[i], owner[j]));
  Scalar one = m.a[0].is_exact() ? Scalar(1) : Scalar::real(1.0);
  r.nu.assign(r.q, one);
  return r;
}

SpinModel tensor(const SpinModel& m1, const SpinModel& m2) {
  SpinModel r;
  r.q = m1.q * m2.q;
  r.a.reserve(static_cast<std::size_t>(r.q) * r.q);
  // Row (i,x) = i*q2+x, column (j,y) = j*q2+y, emitted row-major.
  for (int i = 0; i < m1.q; ++i)
    for (int x = 0; x < m2.q; ++x)
      for (int j = 0; j < m1.q; ++j)
        for (int y = 0; y < m2.q; ++y) r.a.push_back(m1.A(i, j) * m2.A(x, y));
  for (int i = 0; i < m1.q; ++i)
    for (int x = 0; x < m2.q; ++x) r.nu.push_back(m1.nu[i] * m2.nu[x]);
  return r;
}

std::vector<std::pair<int, int>> pair_order(int q) {
  std::vector<std::pair<int, int>> order;
  order.reserve(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) order.push_back({i, i});
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) order.push_back({i, j});
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) order.push_back({j, i});
  return order;
}

SpinModel tensor_square(const SpinModel& m) {
  auto order = pair_order(m.q);
  SpinModel r;
  r.q = m.q * m.q;
  r.a.reserve(order.size() * order.size());
  for (auto [i, j] : order)
    for (auto [k, l] : order) r.a.push_back(m.A(i, k) * m.A(j, l));
  for (auto [i, j] : order) r.nu.push_back(m.nu[i] * m.nu[j]);
  return r;
}

SpinModel skew_tensor_square(const SpinModel& m) {
  auto order = pair_order(m.q);
  SpinModel r;
  r.q = m.q * m.q;
  r.a.reserve(order.size() * order.size());
  for (auto [i, j] : order)
    for (auto [k, l] : order) r.a.push_back(m.A(i, l) * m.A(j, k));
  for (auto [i, j] : order) r.nu.push_back(m.nu[i] * m.nu[j]);
  return r;
}

SpinModel square(const SpinModel& m) {
  SpinModel r;
  r.q = m.q;
  r.nu = m.nu;
  Scalar zero = m.a[0].is_exact() ? Scalar(0) : Scalar::real(0.0);
  r.a.assign(m.a.size(), zero);
  for (int i = 0; i < m.q; ++i)
    for (int j = 0; j < m.q; ++j) {
      Scalar acc = zero;
      for (int k = 0; k < m.q; ++k) acc += m.A(i, k) * m.A(k, j);
      r.A(i, j) = acc;
    }
  return r;
}

SpinModel exponentiation(const SpinModel& h, const Graph& g, std::uint64_t cap) {
  if (!h.zero_one()) throw DomainError("exponentiation: base matrix must be 0/1");
  g.check();
  std::uint64_t maps = 1;
  for (int u = 0; u < g.n; ++u) {
    if (maps > cap / static_cast<std::uint64_t>(h.q))
      throw CapExceeded("exponentiation: " + std::to_string(h.q) + "^" + std::to_string(g.n) +
                        " maps exceed cap " + std::to_string(cap));
    maps *= static_cast<std::uint64_t>(h.q);
  }
  if (maps > cap)
    throw CapExceeded("exponentiation: map count exceeds cap " + std::to_string(cap));

  std::vector<std::uint64_t> pow(g.n + 1, 1);
  for (int u = 0; u < g.n; ++u) pow[u + 1] = pow[u] * h.q;
  auto digit = [&](std::uint64_t f, int u) { return static_cast<int>(f / pow[u] % h.q); };
  auto one = [&](int i, int j) { return !h.A(i, j).is_zero(); };

  SpinModel r;
  r.q = static_cast<int>(maps);
  r.a.assign(maps * maps, Scalar(0));
  for (std::uint64_t f = 0; f < maps; ++f)
    for (std::uint64_t f2 = f; f2 < maps; ++f2) {
      bool ok = true;
      for (const Edge& e : g.edges) {
        if (!one(digit(f, e.u), digit(f2, e.v)) || !one(digit(f, e.v), digit(f2, e.u))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        r.a[f * maps + f2] = Scalar(1);
        r.a[f2 * maps + f] = Scalar(1);
      }
    }
  r.nu.assign(maps, Scalar(1));
  return r;
}

SpinModel loop_restrict(const SpinModel& h) {
  if (!h.zero_one()) throw DomainError("loop_restrict: matrix must be 0/1");
  std::vector<int> keep;
  for (int i = 0; i < h.q; ++i)
    if (!h.A(i, i).is_zero()) keep.push_back(i);
  if (keep.empty()) throw DomainError("loop_restrict: no looped index");
  SpinModel r;
  r.q = static_cast<int>(keep.size());
  for (int i : keep)
    for (int j : keep) r.a.push_back(h.A(i, j));
  for (int i : keep) r.nu.push_back(h.nu[i]);
  return r;
}

namespace {

Scalar scalar_from_json(const nlohmann::json& v) {
  if (v.is_string()) return Scalar::parse_exact(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(static_cast<long long>(v.get<std::int64_t>()));
  if (v.is_number_float()) return Scalar::real(v.get<double>());
  throw ParseError("model json: entries must be numbers or numeric strings");
}

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return s.str();
  return s.flt();
}

}  // namespace

SpinModel parse_model_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("model json: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("q") || !j.contains("A") || !j["q"].is_number_integer() ||
      !j["A"].is_array())
    throw ParseError("model json: expected {\"q\":int,\"A\":[[...]],\"nu\":[...]}");
  SpinModel m;
  m.q = j["q"].get<int>();
  if (m.q < 1) throw ParseError("model json: q must be >= 1");
  if (static_cast<int>(j["A"].size()) != m.q) throw ParseError("model json: A needs q rows");
  for (const auto& row : j["A"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.q)
      throw ParseError("model json: each A row needs q entries");
    for (const auto& v : row) m.a.push_back(scalar_from_json(v));
  }
  if (j.contains("nu")) {
    if (!j["nu"].is_array() || static_cast<int>(j["nu"].size()) != m.q)
      throw ParseError("model json: nu needs q entries");
    for (const auto& v : j["nu"]) m.nu.push_back(scalar_from_json(v));
  } else {
    m.nu.assign(m.q, Scalar(1));
  }
  unify_tags(m);
  m.check();
  return m;
}

std::string model_json(const SpinModel& m) {
  nlohmann::json j;
  j["q"] = m.q;
  j["A"] = nlohmann::json::array();
  for (int i = 0; i < m.q; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.q; ++k) row.push_back(scalar_to_json(m.A(i, k)));
    j["A"].push_back(row);
  }
  j["nu"] = nlohmann::json::array();
  for (const Scalar& s : m.nu) j["nu"].push_back(scalar_to_json(s));
  return j.dump();
}

bool models_equal(const SpinModel& x, const SpinModel& y) {
  if (x.q != y.q) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i].is_exact() != y.a[i].is_exact()) return false;
    if (x.a[i] != y.a[i]) return false;
  }
  for (int i = 0; i < x.q; ++i) {
    if (x.nu[i].is_exact() != y.nu[i].is_exact()) return false;
    if (x.nu[i] != y.nu[i]) return false;
  }
  return true;
}

bool models_equal_up_to_permutation(const SpinModel& x, const SpinModel& y) {
  if (x.q != y.q) return false;
  if (x.q > 8) throw CapExceeded("models_equal_up_to_permutation: q <= 8 required");
  std::vector<int> perm(x.q);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < x.q && ok; ++i) {
      if (x.nu[i].is_exact() != y.nu[perm[i]].is_exact() || x.nu[i] != y.nu[perm[i]]) ok = false;
      for (int j = 0; j < x.q && ok; ++j) {
        if (x.A(i, j).is_exact() != y.A(perm[i], perm[j]).is_exact() ||
            x.A(i, j) != y.A(perm[i], perm[j]))
          ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace liftcert
