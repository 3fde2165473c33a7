#include <thread>

#include "doctest.h"
#include "hsnum/characters.hpp"

using hsnum::BigInt;
using hsnum::CharacterQuery;
using hsnum::Partition;

namespace {

BigInt chi(Partition shape, Partition cls) {
  return hsnum::mn_character(CharacterQuery(std::move(shape), std::move(cls)));
}

Partition transposition_class(int d) {
  std::vector<int> parts(static_cast<std::size_t>(d - 2), 1);
  parts.insert(parts.begin(), 2);
  return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("query validation") {
  CHECK_THROWS_AS(CharacterQuery(Partition({2}), Partition({1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("mn_character examples") {
  CHECK(chi({}, {}) == 1);
  for (int d = 1; d <= 7; ++d) {
    for (auto const& mu : hsnum::partitions_of(d)) {
      CHECK(chi(Partition({d}), mu) == 1);
    }
  }
  CHECK(chi({2, 1}, {2, 1}) == 0);
  CHECK(chi({1, 1, 1}, {2, 1}) == -1);
  CHECK(chi({2, 1}, {3}) == -1);
  CHECK(chi({2, 2}, {2, 2}) == 2);
}

TEST_CASE("standard and sign representations") {
  // chi^{(d-1,1)}(mu) = fixed points - 1; chi^{1^d}(mu) = sign(mu).
  for (int d = 2; d <= 10; ++d) {
    for (auto const& mu : hsnum::partitions_of(d)) {
      CHECK(chi(Partition({d - 1, 1}), mu) == mu.multiplicity(1) - 1);
      CHECK(chi(Partition::ones(d), mu) == hsnum::sign(mu));
    }
  }
}

TEST_CASE("value at the identity is the dimension") {
  for (int d = 0; d <= 12; ++d) {
    BigInt sum = 0;
    for (auto const& lambda : hsnum::partitions_of(d)) {
      BigInt const v = chi(lambda, Partition::ones(d));
      CHECK(v == hsnum::dimension(lambda));
      sum += v * v;
    }
    CHECK(sum == hsnum::factorial(static_cast<unsigned>(d)));
  }
}

TEST_CASE("row orthogonality") {
  for (int d = 1; d <= 8; ++d) {
    auto const all = hsnum::partitions_of(d);
    for (auto const& a : all) {
      for (auto const& b : all) {
        BigInt sum = 0;
        for (auto const& mu : all) {
          sum += hsnum::class_size(mu) * chi(a, mu) * chi(b, mu);
        }
        CHECK(sum == (a == b ? hsnum::factorial(static_cast<unsigned>(d)) : 0));
      }
    }
  }
}

TEST_CASE("conjugation twists by the sign") {
  for (int d = 1; d <= 10; ++d) {
    auto const all = hsnum::partitions_of(d);
    for (auto const& lambda : all) {
      for (auto const& mu : all) {
        CHECK(chi(hsnum::conjugate(lambda), mu) == hsnum::sign(mu) * chi(lambda, mu));
      }
    }
  }
}

TEST_CASE("central character on transpositions") {
  CHECK(hsnum::central_char_transposition(Partition({3})) == 3);
  CHECK(hsnum::central_char_transposition(Partition({2, 1})) == 0);
  CHECK(hsnum::central_char_transposition(Partition({1, 1, 1})) == -3);
  CHECK(hsnum::central_char_transposition(Partition({1})) == 0);
  CHECK(hsnum::central_char_transposition(Partition()) == 0);

  for (int d = 2; d <= 15; ++d) {
    BigInt const pairs = BigInt(d) * (d - 1) / 2;
    for (auto const& lambda : hsnum::partitions_of(d)) {
      CHECK(hsnum::central_char_transposition(lambda) * hsnum::dimension(lambda)
            == pairs * chi(lambda, transposition_class(d)));
    }
  }
}

TEST_CASE("concurrent lookups agree with sequential ones") {
  auto const           shapes = hsnum::partitions_of(11);
  std::vector<BigInt>  expected;
  for (auto const& lambda : shapes) {
    expected.push_back(chi(lambda, transposition_class(11)));
  }
  std::vector<std::vector<BigInt>> seen(4);
  std::vector<std::thread>         workers;
  for (std::size_t w = 0; w < seen.size(); ++w) {
    workers.emplace_back([&, w] {
      for (auto const& lambda : shapes) {
        seen[w].push_back(chi(lambda, transposition_class(11)));
        hsnum::partition_count(static_cast<int>(40 + w));
      }
    });
  }
  for (auto& t : workers) {
    t.join();
  }
  for (auto const& s : seen) {
    CHECK(s == expected);
  }
}
