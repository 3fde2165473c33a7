#include "hsnum/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hsnum {

CharacterQuery::CharacterQuery(Partition shape_, Partition class_profile_)
    : shape(std::move(shape_)), class_profile(std::move(class_profile_)) {
  if (shape.size() != class_profile.size()) {
    throw std::invalid_argument("character query: shape " + shape.to_string()
                                + " and class " + class_profile.to_string()
                                + " have different sizes");
  }
}

namespace {

struct BorderStrip {
  Partition remainder;
  int       height;
};

// All shapes obtained from lambda by removing a border strip of length k.
// Works on the beta-set (first-column hook lengths): a strip removal moves one
// bead from position b to the free position b - k, and the strip height is
// the number of beads jumped over.
std::vector<BorderStrip> remove_border_strips(Partition const& lambda, int k) {
  int const        len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    beta[i] = lambda[i] + (len - 1 - i);
  }
  std::vector<BorderStrip> out;
  for (int i = 0; i < len; ++i) {
    int const target = beta[i] - k;
    if (target < 0
        || std::find(beta.begin(), beta.end(), target) != beta.end()) {
      continue;
    }
    int height = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) {
        ++height;
      }
    }
    std::vector<int> moved = beta;
    moved[i]               = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      int const part = moved[j] - (len - 1 - j);
      if (part > 0) {
        parts.push_back(part);
      }
    }
    out.push_back({Partition(std::move(parts)), height});
  }
  return out;
}

using MemoKey = std::pair<Partition, Partition>;

std::mutex&                  memo_mutex() {
  static std::mutex m;
  return m;
}
std::map<MemoKey, BigInt>& memo_table() {
  static std::map<MemoKey, BigInt> table;
  return table;
}

BigInt mn_recursive(Partition const& shape, Partition const& cls) {
  if (cls.empty()) {
    return 1;  // shape is necessarily empty
  }
  MemoKey key{shape, cls};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo_table().find(key);
    if (it != memo_table().end()) {
      return it->second;
    }
  }
  auto const      parts = cls.parts();
  Partition const rest(std::vector<int>(parts.begin() + 1, parts.end()));
  BigInt          total = 0;
  for (auto const& strip : remove_border_strips(shape, parts[0])) {
    BigInt term = mn_recursive(strip.remainder, rest);
    if (strip.height % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex());
  memo_table().emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_character(CharacterQuery const& q) {
  return mn_recursive(q.shape, q.class_profile);
}

BigInt central_char_transposition(Partition const& lambda) {
  if (lambda.size() < 2) {
    return 0;
  }
  return BigInt(content_sum(lambda));
}

}  // namespace hsnum
