#include <map>
#include <numeric>

#include "doctest.h"
#include "hsnum/hurwitz.hpp"

using hsnum::BigInt;
using hsnum::Method;
using hsnum::Partition;

namespace {

using Perm = std::vector<int>;

std::vector<std::pair<int, int>> transpositions(int d) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

Partition cycle_type(Perm const& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int>  lengths;
  for (std::size_t x = 0; x < p.size(); ++x) {
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(p[y])) {
      seen[y] = true;
      ++len;
    }
    if (len > 0) {
      lengths.push_back(len);
    }
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

// Plain odometer over all C(d,2)^r tuples: no pruning, product recomputed from
// scratch, orbits by union-find.
std::pair<long long, long long> naive_counts(int d, int r) {
  auto const trans = transpositions(d);
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  long long all = 0, transitive = 0;
  if (trans.empty() && r > 0) {
    return {0, 0};
  }
  while (true) {
    Perm p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> parent(static_cast<std::size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        x = parent[x];
      }
      return x;
    };
    for (std::size_t i : idx) {
      auto [a, b] = trans[i];
      std::swap(p[a], p[b]);
      parent[find(a)] = find(b);
    }
    bool identity = true;
    for (int x = 0; x < d; ++x) {
      identity = identity && p[x] == x;
    }
    if (identity) {
      ++all;
      int roots = 0;
      for (int x = 0; x < d; ++x) {
        roots += find(x) == x ? 1 : 0;
      }
      transitive += roots == 1 ? 1 : 0;
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == trans.size()) {
      idx[pos++] = 0;
    }
    if (pos == idx.size()) {
      break;
    }
  }
  return {all, transitive};
}

// Number of r-tuples with each possible product, by dynamic programming over
// the whole group S_d.
std::map<Perm, BigInt> product_distribution(int d, int r) {
  Perm id(static_cast<std::size_t>(d));
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, BigInt> counts{{id, 1}};
  for (int s = 0; s < r; ++s) {
    std::map<Perm, BigInt> next;
    for (auto const& [p, c] : counts) {
      for (auto [a, b] : transpositions(d)) {
        Perm q = p;
        std::swap(q[a], q[b]);
        next[q] += c;
      }
    }
    counts = std::move(next);
  }
  return counts;
}

// Hurwitz's formula in the raw-tuple normalisation: (2d-2)! d^{d-3}.
hsnum::Rational genus_zero_formula(int d) {
  hsnum::Rational v(hsnum::factorial(static_cast<unsigned>(2 * d - 2)));
  for (int i = 0; i < d - 3; ++i) {
    v *= d;
  }
  for (int i = d - 3; i < 0; ++i) {
    v /= d;
  }
  return v;
}

}  // namespace

TEST_CASE("HurwitzQuery validation") {
  CHECK_THROWS_AS(hsnum::HurwitzQuery(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(hsnum::HurwitzQuery(0, 0), std::invalid_argument);
  CHECK(hsnum::HurwitzQuery(1, 3).transpositions() == 6);
  CHECK(hsnum::HurwitzQuery(0, 1).transpositions() == 0);
}

TEST_CASE("method names") {
  CHECK(hsnum::parse_method("cutjoin") == Method::CutJoin);
  CHECK(hsnum::to_string(Method::Characters) == "characters");
  CHECK_THROWS_AS(hsnum::parse_method("fast"), std::invalid_argument);
}

TEST_CASE("brute force examples") {
  CHECK(hsnum::brute_force_count(2, 2, true) == 1);
  CHECK(hsnum::brute_force_count(3, 4, false) == 27);
  CHECK(hsnum::brute_force_count(3, 4, true) == 24);
  CHECK(hsnum::brute_force_count(1, 0, true) == 1);
  CHECK(hsnum::brute_force_count(1, 2, false) == 0);
  CHECK(hsnum::brute_force_count(3, 10, false) == 19683);
  CHECK(hsnum::brute_force_count(3, 10, true) == 19680);
}

TEST_CASE("brute force matches plain enumeration") {
  for (int d = 1; d <= 4; ++d) {
    for (int r = 0; r <= (d <= 3 ? 9 : 6); ++r) {
      auto const [all, transitive] = naive_counts(d, r);
      CAPTURE(d);
      CAPTURE(r);
      CHECK(hsnum::brute_force_count(d, r, false) == all);
      CHECK(hsnum::brute_force_count(d, r, true) == transitive);
    }
  }
}

TEST_CASE("brute force cap") {
  CHECK(hsnum::brute_force_node_bound(3, 2) == 1 + 3 + 9);
  CHECK(hsnum::brute_force_node_bound(1, 5) == 1);
  CHECK(hsnum::brute_force_feasible(4, 10));
  CHECK_FALSE(hsnum::brute_force_feasible(5, 10));
  CHECK_THROWS_AS(hsnum::brute_force_count(5, 10, true), hsnum::CapExceeded);
  CHECK_THROWS_AS(hsnum::brute_force_count(3, 4, true, 50),
                  hsnum::CapExceeded);
  CHECK(hsnum::brute_force_node_bound(40, 60)
        == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("disconnected_count examples") {
  for (int d = 0; d <= 6; ++d) {
    CHECK(hsnum::disconnected_count(d, 0) == 1);
  }
  CHECK(hsnum::disconnected_count(0, 3) == 0);
  CHECK(hsnum::disconnected_count(3, 4) == 27);
  CHECK(hsnum::disconnected_count(3, 10) == 19683);
  CHECK(hsnum::disconnected_count(3, 2) == 3);
}

TEST_CASE("odd tuple lengths never multiply to the identity") {
  for (int d = 2; d <= 10; ++d) {
    for (int r = 1; r <= 9; r += 2) {
      CHECK(hsnum::disconnected_count(d, r) == 0);
    }
  }
}

TEST_CASE("cut-and-join walk") {
  auto const zero = hsnum::cut_and_join_walk(4, 0);
  for (auto const& [mu, v] : zero.entries) {
    CHECK(v == (mu == Partition::ones(4) ? 1 : 0));
  }
  CHECK(hsnum::cut_and_join_walk(3, 2).at(Partition::ones(3)) == 3);
  CHECK(hsnum::cut_and_join_walk(3, 4).at(Partition::ones(3)) == 27);
  CHECK(hsnum::cut_and_join_walk(1, 3).at(Partition::ones(1)) == 0);

  SUBCASE("entries match the product distribution over S_d") {
    for (int d = 1; d <= 5; ++d) {
      for (int r = 0; r <= 8; ++r) {
        auto const walk = hsnum::cut_and_join_walk(d, r);
        auto const dist = product_distribution(d, r);
        BigInt     mass = 0;
        for (auto const& [mu, v] : walk.entries) {
          CHECK(v >= 0);
          mass += v * hsnum::class_size(mu);
        }
        CHECK(mass == hsnum::power(BigInt(d) * (d - 1) / 2, r));
        for (auto const& [perm, count] : dist) {
          CHECK(walk.at(cycle_type(perm)) == count);
        }
      }
    }
  }
}

TEST_CASE("connected_count examples") {
  CHECK(hsnum::connected_count(1, 0) == 1);
  CHECK(hsnum::connected_count(1, 2) == 0);
  CHECK(hsnum::connected_count(2, 2) == 1);
  CHECK(hsnum::connected_count(3, 4) == 24);
  CHECK(hsnum::connected_count(3, 6) == 240);
  CHECK(hsnum::connected_count(3, 10) == 19680);
}

TEST_CASE("connected counts need at least d - 1 transpositions") {
  for (int d = 1; d <= 6; ++d) {
    for (int r = 0; r < d - 1; ++r) {
      CHECK(hsnum::connected_count(d, r) == 0);
    }
  }
}

TEST_CASE("genus zero agrees with Hurwitz's formula") {
  for (int d = 1; d <= 20; ++d) {
    CAPTURE(d);
    CHECK(hsnum::Rational(hsnum::connected_count(d, 2 * d - 2))
          == genus_zero_formula(d));
  }
}

TEST_CASE("large instance regression") {
  // Frozen from an independent arbitrary-precision evaluation of the same
  // character sum and recursion.
  CHECK(hsnum::hurwitz_simple(hsnum::HurwitzQuery(10, 20), Method::Characters)
            .value
        == BigInt("85637371771597126320371524087241525349723664514035427946673"
                  "1082096975409338890854968076986395865907200000000000000"));
}

TEST_CASE("table-based recursion on each engine") {
  for (Method engine : {Method::Characters, Method::CutJoin, Method::Brute}) {
    auto const table = hsnum::disconnected_table(4, 8, engine);
    CHECK(hsnum::connected_from_table(table, 3, 6) == 240);
    CHECK(hsnum::connected_from_table(table, 4, 6) == 2880);
  }
  auto const small = hsnum::disconnected_table(2, 2, Method::Characters);
  CHECK_THROWS_AS(hsnum::connected_from_table(small, 3, 2),
                  std::invalid_argument);
}

TEST_CASE("hurwitz_simple") {
  using hsnum::HurwitzQuery;
  CHECK(hsnum::hurwitz_simple(HurwitzQuery(0, 2)).value == 1);
  CHECK(hsnum::hurwitz_simple(HurwitzQuery(1, 2)).value == 1);
  CHECK(hsnum::hurwitz_simple(HurwitzQuery(0, 3)).value == 24);
  CHECK(hsnum::hurwitz_simple(HurwitzQuery(1, 3)).value == 240);
  CHECK(hsnum::hurwitz_simple(HurwitzQuery(3, 3)).value == 19680);
  CHECK(hsnum::hurwitz_simple(HurwitzQuery(1, 3)).connected);

  SUBCASE("every method agrees") {
    for (int g = 0; g <= 2; ++g) {
      for (int d = 1; d <= 4; ++d) {
        HurwitzQuery const q(g, d);
        auto const expected = hsnum::hurwitz_simple(q, Method::Characters);
        for (Method m : {Method::Auto, Method::Brute, Method::CutJoin,
                         Method::All}) {
          CHECK(hsnum::hurwitz_simple(q, m) == expected);
        }
      }
    }
  }
  SUBCASE("degree one") {
    CHECK(hsnum::hurwitz_simple(HurwitzQuery(0, 1)).value == 1);
    for (int g = 1; g <= 5; ++g) {
      CHECK(hsnum::hurwitz_simple(HurwitzQuery(g, 1)).value == 0);
    }
  }
  SUBCASE("brute force beyond the cap") {
    CHECK_THROWS_AS(hsnum::hurwitz_simple(HurwitzQuery(2, 5), Method::Brute),
                    hsnum::CapExceeded);
    auto const engines = hsnum::run_engines(HurwitzQuery(2, 5), Method::All);
    REQUIRE(engines.size() == 2);
    CHECK(engines[0].method == Method::Characters);
    CHECK(engines[1].method == Method::CutJoin);
    CHECK(engines[0].value == engines[1].value);
  }
}

TEST_CASE("pair_count") {
  using hsnum::HurwitzQuery;
  using hsnum::Rational;
  CHECK(hsnum::pair_count(HurwitzQuery(1, 3)) == Rational(40));
  CHECK(hsnum::pair_count(HurwitzQuery(0, 2)) == Rational(1, 2));
  CHECK(hsnum::pair_count(HurwitzQuery(3, 3)) == Rational(3280));
}
