#include "hsnum/hurwitz.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "hsnum/characters.hpp"

namespace hsnum {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Auto:
      return "auto";
    case Method::Brute:
      return "brute";
    case Method::Characters:
      return "characters";
    case Method::CutJoin:
      return "cutjoin";
    case Method::All:
      return "all";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Auto, Method::Brute, Method::Characters,
                   Method::CutJoin, Method::All}) {
    if (name == to_string(m)) {
      return m;
    }
  }
  throw std::invalid_argument("unknown method '" + std::string(name)
                              + "' (expected auto|brute|characters|cutjoin|all)");
}

HurwitzQuery::HurwitzQuery(int genus_, int degree_)
    : genus(genus_), degree(degree_) {
  if (genus < 0) {
    throw std::invalid_argument("genus must be nonnegative");
  }
  if (degree < 1) {
    throw std::invalid_argument("degree must be positive");
  }
}

////////////////////////////////////////////////////////////////////////////////
// Brute force
////////////////////////////////////////////////////////////////////////////////

std::uint64_t brute_force_node_bound(int d, int r) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto const     t    = static_cast<std::uint64_t>(d) * (d - 1) / 2;
  std::uint64_t  level = 1;
  std::uint64_t  total = 1;
  for (int i = 1; i <= r; ++i) {
    if (t != 0 && level > kMax / t) {
      return kMax;
    }
    level *= t;
    if (total > kMax - level) {
      return kMax;
    }
    total += level;
  }
  return total;
}

bool brute_force_feasible(int d, int r, std::uint64_t cap) {
  return brute_force_node_bound(d, r) <= cap;
}

namespace {

// Depth-first search over transposition tuples. The running product is kept
// in place (each step swaps two images, undone on return). A branch is cut
// when the product is further from the identity than the remaining steps
// allow, or, for transitive counts, when too few steps remain to merge the
// current orbits.
class TupleSearch {
 public:
  TupleSearch(int d, int r, bool transitive)
      : _d(d),
        _r(r),
        _transitive(transitive),
        _perm(static_cast<std::size_t>(d)),
        _labels(static_cast<std::size_t>(r) + 1,
                std::vector<int>(static_cast<std::size_t>(d))),
        _seen(static_cast<std::size_t>(d)) {
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        _transpositions.emplace_back(a, b);
      }
    }
    for (int x = 0; x < d; ++x) {
      _perm[x]      = x;
      _labels[0][x] = x;
    }
  }

  std::uint64_t run() {
    _count = 0;
    visit(0, _d);
    return _count;
  }

 private:
  int moved_distance() {
    std::fill(_seen.begin(), _seen.end(), false);
    int cycles = 0;
    for (int x = 0; x < _d; ++x) {
      if (!_seen[x]) {
        ++cycles;
        for (int y = x; !_seen[y]; y = _perm[y]) {
          _seen[y] = true;
        }
      }
    }
    return _d - cycles;
  }

  void visit(int depth, int orbits) {
    int const remaining = _r - depth;
    int const distance  = moved_distance();
    if (distance > remaining || (remaining - distance) % 2 != 0) {
      return;
    }
    if (_transitive && orbits - 1 > remaining) {
      return;
    }
    if (remaining == 0) {
      ++_count;  // product is the identity; orbits == 1 when transitive
      return;
    }
    for (auto [a, b] : _transpositions) {
      std::swap(_perm[a], _perm[b]);
      int next_orbits = orbits;
      if (_transitive) {
        auto const& cur  = _labels[depth];
        auto&       next = _labels[depth + 1];
        next             = cur;
        if (cur[a] != cur[b]) {
          int const from = cur[b];
          int const to   = cur[a];
          for (int& label : next) {
            if (label == from) {
              label = to;
            }
          }
          --next_orbits;
        }
      }
      visit(depth + 1, next_orbits);
      std::swap(_perm[a], _perm[b]);
    }
  }

  int                              _d;
  int                              _r;
  bool                             _transitive;
  std::vector<std::pair<int, int>> _transpositions;
  std::vector<int>                 _perm;
  std::vector<std::vector<int>>    _labels;
  std::vector<bool>                _seen;
  std::uint64_t                    _count = 0;
};

}  // namespace

BigInt brute_force_count(int d, int r, bool require_transitive,
                         std::uint64_t cap) {
  if (d < 1) {
    throw std::invalid_argument("brute_force_count: d must be positive");
  }
  if (r < 0) {
    throw std::invalid_argument("brute_force_count: r must be nonnegative");
  }
  if (!brute_force_feasible(d, r, cap)) {
    throw CapExceeded("brute force for d=" + std::to_string(d)
                      + ", r=" + std::to_string(r) + " needs up to "
                      + std::to_string(brute_force_node_bound(d, r))
                      + " node visits, cap is " + std::to_string(cap));
  }
  return BigInt(TupleSearch(d, r, require_transitive).run());
}

////////////////////////////////////////////////////////////////////////////////
// Character sum
////////////////////////////////////////////////////////////////////////////////

std::vector<BigInt> disconnected_series(int d, int r) {
  if (d < 0 || r < 0) {
    throw std::invalid_argument("disconnected_series: negative argument");
  }
  std::vector<BigInt> series(static_cast<std::size_t>(r) + 1, BigInt(0));
  if (d == 0) {
    series[0] = 1;
    return series;
  }
  auto const          shapes = partitions_of(d);
  std::vector<BigInt> weight;   // (f^lambda)^2 c^s, advanced in s
  std::vector<BigInt> content;  // c(lambda)
  for (auto const& lambda : shapes) {
    BigInt f = dimension(lambda);
    weight.push_back(f * f);
    content.push_back(central_char_transposition(lambda));
  }
  BigInt const d_factorial = factorial(static_cast<unsigned>(d));
  for (int s = 0; s <= r; ++s) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      sum += weight[i];
      weight[i] *= content[i];
    }
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(sum, d_factorial, quotient, remainder);
    if (remainder != 0) {
      throw InternalInexact("character sum for d=" + std::to_string(d)
                            + ", r=" + std::to_string(s)
                            + " is not divisible by d!");
    }
    series[s] = std::move(quotient);
  }
  return series;
}

BigInt disconnected_count(int d, int r) {
  return disconnected_series(d, r).back();
}

////////////////////////////////////////////////////////////////////////////////
// Cut-and-join walk
////////////////////////////////////////////////////////////////////////////////

namespace {

struct Transition {
  std::size_t source;
  BigInt      weight;
};

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// For the class nu, the classes mu = type(sigma_nu * tau) over all
// transpositions tau, with multiplicities. Multiplying by a transposition
// whose letters share a cycle of length p cuts it into (a, p - a): p choices
// for a != p - a, p/2 for a = p - a. Letters in different cycles p, q join
// them into p + q in p*q ways.
class WalkOperator {
 public:
  explicit WalkOperator(int d) : _classes(partitions_of(d)) {
    for (std::size_t i = 0; i < _classes.size(); ++i) {
      _index.emplace(_classes[i], i);
    }
    for (auto const& nu : _classes) {
      std::map<std::size_t, BigInt> row;
      auto const                    parts = nu.parts();
      std::vector<int>              base(parts.begin(), parts.end());
      for (std::size_t i = 0; i < base.size(); ++i) {
        int const p = base[i];
        for (int a = 1; 2 * a <= p; ++a) {
          std::vector<int> cut = base;
          cut[i]               = a;
          cut.push_back(p - a);
          row[_index.at(sorted_partition(std::move(cut)))]
              += (2 * a == p) ? p / 2 : p;
        }
        for (std::size_t j = i + 1; j < base.size(); ++j) {
          std::vector<int> joined = base;
          joined[i] += joined[j];
          joined.erase(joined.begin() + static_cast<std::ptrdiff_t>(j));
          row[_index.at(sorted_partition(std::move(joined)))]
              += base[i] * base[j];
        }
      }
      auto& out = _transitions.emplace_back();
      for (auto& [src, w] : row) {
        out.push_back({src, std::move(w)});
      }
    }
  }

  std::vector<Partition> const& classes() const { return _classes; }
  std::size_t index(Partition const& mu) const { return _index.at(mu); }

  std::vector<BigInt> apply(std::vector<BigInt> const& v) const {
    std::vector<BigInt> out(v.size(), BigInt(0));
    for (std::size_t i = 0; i < _transitions.size(); ++i) {
      for (auto const& t : _transitions[i]) {
        out[i] += t.weight * v[t.source];
      }
    }
    return out;
  }

 private:
  std::vector<Partition>                _classes;
  std::map<Partition, std::size_t>      _index;
  std::vector<std::vector<Transition>> _transitions;
};

template <typename Visitor>
std::vector<BigInt> walk(int d, int r, Visitor&& on_step) {
  if (d < 1) {
    throw std::invalid_argument("cut_and_join_walk: d must be positive");
  }
  if (r < 0) {
    throw std::invalid_argument("cut_and_join_walk: r must be nonnegative");
  }
  WalkOperator const  op(d);
  std::size_t const   identity = op.index(Partition::ones(d));
  std::vector<BigInt> v(op.classes().size(), BigInt(0));
  v[identity] = 1;
  on_step(0, v[identity]);
  for (int s = 1; s <= r; ++s) {
    v = op.apply(v);
    on_step(s, v[identity]);
  }
  return v;
}

}  // namespace

ClassVector cut_and_join_walk(int d, int r) {
  auto const  v = walk(d, r, [](int, BigInt const&) {});
  ClassVector out;
  out.degree        = d;
  auto const shapes = partitions_of(d);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    out.entries.emplace(shapes[i], v[i]);
  }
  return out;
}

std::vector<BigInt> cut_and_join_identity_series(int d, int r) {
  std::vector<BigInt> series;
  walk(d, r, [&series](int, BigInt const& x) { series.push_back(x); });
  return series;
}

////////////////////////////////////////////////////////////////////////////////
// Connected counts
////////////////////////////////////////////////////////////////////////////////

DisconnectedTable disconnected_table(int d, int r, Method engine) {
  if (d < 0 || r < 0) {
    throw std::invalid_argument("disconnected_table: negative argument");
  }
  DisconnectedTable table;
  table.reserve(static_cast<std::size_t>(d) + 1);
  table.push_back(disconnected_series(0, r));
  for (int k = 1; k <= d; ++k) {
    switch (engine) {
      case Method::CutJoin:
        table.push_back(cut_and_join_identity_series(k, r));
        break;
      case Method::Brute: {
        auto& row = table.emplace_back();
        for (int s = 0; s <= r; ++s) {
          row.push_back(brute_force_count(k, s, false));
        }
        break;
      }
      default:
        table.push_back(disconnected_series(k, r));
        break;
    }
  }
  return table;
}

BigInt connected_from_table(DisconnectedTable const& table, int d, int r) {
  if (d < 1 || r < 0) {
    throw std::invalid_argument("connected_from_table: need d >= 1, r >= 0");
  }
  if (table.size() <= static_cast<std::size_t>(d)) {
    throw std::invalid_argument("connected_from_table: table too small");
  }
  for (auto const& row : table) {
    if (row.size() <= static_cast<std::size_t>(r)) {
      throw std::invalid_argument("connected_from_table: table too small");
    }
  }
  int const                        n_max = std::max(d, r);
  std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    binom[n].assign(static_cast<std::size_t>(n) + 1, BigInt(1));
    for (int k = 1; k < n; ++k) {
      binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
  }

  std::vector<std::vector<BigInt>> conn(
      static_cast<std::size_t>(d) + 1,
      std::vector<BigInt>(static_cast<std::size_t>(r) + 1, BigInt(0)));
  for (int n = 1; n <= d; ++n) {
    for (int s = 0; s <= r; ++s) {
      BigInt value = table[n][s];
      for (int k = 1; k < n; ++k) {
        for (int t = 0; t <= s; ++t) {
          BigInt const& c = conn[k][t];
          BigInt const& rest = table[n - k][s - t];
          if (c == 0 || rest == 0) {
            continue;
          }
          value -= binom[n - 1][k - 1] * binom[s][t] * c * rest;
        }
      }
      if (value < 0) {
        throw InternalInexact("negative connected count at d="
                              + std::to_string(n) + ", r="
                              + std::to_string(s));
      }
      conn[n][s] = std::move(value);
    }
  }
  return conn[d][r];
}

BigInt connected_count(int d, int r) {
  return connected_from_table(disconnected_table(d, r, Method::Characters), d,
                              r);
}

////////////////////////////////////////////////////////////////////////////////
// Entry points
////////////////////////////////////////////////////////////////////////////////

namespace {

BigInt run_one(Method engine, int d, int r, EngineOptions const& opts) {
  switch (engine) {
    case Method::Brute:
      return brute_force_count(d, r, true, opts.cap);
    case Method::CutJoin:
      return connected_from_table(disconnected_table(d, r, Method::CutJoin), d,
                                  r);
    default:
      return connected_count(d, r);
  }
}

}  // namespace

std::vector<EngineResult> run_engines(HurwitzQuery const& q, Method method,
                                      EngineOptions const& opts) {
  int const d = q.degree;
  int const r = q.transpositions();
  std::vector<Method> engines;
  switch (method) {
    case Method::Brute:
    case Method::Characters:
    case Method::CutJoin:
      engines = {method};
      break;
    case Method::Auto:
      if (brute_force_feasible(d, r, opts.cap)) {
        engines.push_back(Method::Brute);
      }
      engines.push_back(Method::Characters);
      break;
    case Method::All:
      if (brute_force_feasible(d, r, opts.cap)) {
        engines.push_back(Method::Brute);
      }
      engines.push_back(Method::Characters);
      engines.push_back(Method::CutJoin);
      break;
  }
  std::vector<EngineResult> results;
  for (Method engine : engines) {
    results.push_back({engine, run_one(engine, d, r, opts)});
  }
  return results;
}

TupleCount hurwitz_simple(HurwitzQuery const& q, Method method,
                          EngineOptions const& opts) {
  auto const results = run_engines(q, method, opts);
  for (auto const& res : results) {
    if (res.value != results.front().value) {
      throw MethodDisagreement(
          "h_{" + std::to_string(q.genus) + ",1^" + std::to_string(q.degree)
          + "}: " + std::string(to_string(results.front().method)) + " gives "
          + to_string(results.front().value) + ", "
          + std::string(to_string(res.method)) + " gives "
          + to_string(res.value));
    }
  }
  return {results.front().value, true};
}

Rational pair_count(HurwitzQuery const& q, Method method,
                    EngineOptions const& opts) {
  auto const h = hurwitz_simple(q, method, opts);
  return Rational(h.value, factorial(static_cast<unsigned>(q.degree)));
}

}  // namespace hsnum
