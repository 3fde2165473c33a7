#ifndef HSNUM_PARTITIONS_HPP_
#define HSNUM_PARTITIONS_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hsnum/bigint.hpp"

namespace hsnum {

// An integer partition: parts weakly decreasing and strictly positive. The
// empty partition is the unique partition of 0. Used both as a Young-diagram
// shape (irreducible label) and as a cycle type (conjugacy class label).
class Partition {
 public:
  Partition() = default;

  // Throws std::invalid_argument unless the parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // The partition 1^n.
  static Partition ones(int n);

  std::span<int const> parts() const noexcept { return _parts; }
  int  size() const noexcept { return _size; }
  int  length() const noexcept { return static_cast<int>(_parts.size()); }
  bool empty() const noexcept { return _parts.empty(); }
  int  operator[](std::size_t i) const { return _parts[i]; }

  // Number of parts equal to k.
  int multiplicity(int k) const noexcept;

  std::string to_string() const;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend std::strong_ordering operator<=>(Partition const& a,
                                          Partition const& b) {
    return a._parts <=> b._parts;
  }

 private:
  std::vector<int> _parts;
  int              _size = 0;
};

// Every partition of n exactly once, in reverse-lexicographic order:
// (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

// The partition function p(n); memoized.
BigInt partition_count(int n);

Partition conjugate(Partition const& lambda);

// Hook length of every cell, row by row.
std::vector<int> hook_lengths(Partition const& lambda);

// f^lambda = n! / (product of hook lengths), the number of standard Young
// tableaux of shape lambda.
BigInt dimension(Partition const& lambda);

// Sum over cells (i, j) of (j - i), 0-based.
long long content_sum(Partition const& lambda);

// Size of the conjugacy class of S_n with cycle type mu:
// n! / (prod_k k^{m_k} m_k!).
BigInt class_size(Partition const& mu);

// Sign of any permutation of cycle type mu: (-1)^(n - #parts).
int sign(Partition const& mu);

}  // namespace hsnum

#endif  // HSNUM_PARTITIONS_HPP_
