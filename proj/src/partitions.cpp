#include "hsnum/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hsnum {

Partition::Partition(std::vector<int> parts) : _parts(std::move(parts)) {
  for (std::size_t i = 0; i < _parts.size(); ++i) {
    if (_parts[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive, got "
                                  + to_string());
    }
    if (i > 0 && _parts[i] > _parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing, got "
                                  + to_string());
    }
  }
  _size = std::accumulate(_parts.begin(), _parts.end(), 0);
}

Partition Partition::ones(int n) {
  if (n < 0) {
    throw std::invalid_argument("Partition::ones: n must be nonnegative");
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(_parts.begin(), _parts.end(), k));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < _parts.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(_parts[i]);
  }
  out += ')';
  return out;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    generate(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) {
    throw std::invalid_argument("partitions_of: n must be nonnegative");
  }
  std::vector<Partition> out;
  std::vector<int>       prefix;
  generate(n, n, prefix, out);
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) {
    throw std::invalid_argument("partition_count: n must be nonnegative");
  }
  static std::mutex          mtx;
  static std::vector<BigInt> memo;
  std::lock_guard<std::mutex> lock(mtx);
  if (static_cast<std::size_t>(n) < memo.size()) {
    return memo[n];
  }
  // Coin-change DP over allowed part sizes; refills the whole table.
  std::vector<BigInt> table(static_cast<std::size_t>(n) + 1, BigInt(0));
  table[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int m = part; m <= n; ++m) {
      table[m] += table[m - part];
    }
  }
  memo = std::move(table);
  return memo[n];
}

Partition conjugate(Partition const& lambda) {
  if (lambda.empty()) {
    return lambda;
  }
  std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts()) {
    for (int j = 0; j < row; ++j) {
      ++cols[j];
    }
  }
  return Partition(std::move(cols));
}

std::vector<int> hook_lengths(Partition const& lambda) {
  Partition const  conj = conjugate(lambda);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int const arm = lambda[i] - j - 1;
      int const leg = conj[j] - i - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

BigInt dimension(Partition const& lambda) {
  BigInt hook_product = 1;
  for (int h : hook_lengths(lambda)) {
    hook_product *= h;
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(factorial(lambda.size()), hook_product,
                                   quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("hook-length quotient is not exact for "
                           + lambda.to_string());
  }
  return quotient;
}

long long content_sum(Partition const& lambda) {
  long long total = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    long long const row = lambda[i];
    // sum_{j=0}^{row-1} (j - i)
    total += row * (row - 1) / 2 - row * i;
  }
  return total;
}

BigInt class_size(Partition const& mu) {
  BigInt centralizer = 1;
  auto   parts       = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) {
      ++j;
    }
    auto const m = static_cast<unsigned>(j - i);
    centralizer *= power(BigInt(parts[i]), m) * factorial(m);
    i = j;
  }
  return factorial(mu.size()) / centralizer;
}

int sign(Partition const& mu) {
  return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
}

}  // namespace hsnum
