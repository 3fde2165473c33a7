#ifndef HSNUM_HURWITZ_HPP_
#define HSNUM_HURWITZ_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsnum/bigint.hpp"
#include "hsnum/partitions.hpp"

namespace hsnum {

// Simple Hurwitz numbers h_{g,1^d}: the number of tuples of r = 2d + 2g - 2
// transpositions in S_d with product 1 that generate a transitive subgroup.
// Three engines compute the underlying tuple counts:
//
//   brute       depth-first enumeration of the tuples themselves;
//   characters  Frobenius formula sum_lambda (f^lambda)^2 c(lambda)^r / d!,
//               c(lambda) the content sum;
//   cutjoin     r-fold multiplication by the transposition class sum in the
//               class algebra of S_d.
//
// The last two produce all (possibly disconnected) tuples; the transitive
// count is extracted by removing the orbit of letter 1.

enum class Method { Auto, Brute, Characters, CutJoin, All };

std::string_view to_string(Method m);
// Throws std::invalid_argument for unknown names.
Method parse_method(std::string_view name);

// Default node budget for the brute-force engine.
inline constexpr std::uint64_t kDefaultCap = 100'000'000;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MethodDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A division that should have been exact left a remainder. Never expected.
class InternalInexact : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct HurwitzQuery {
  int genus  = 0;
  int degree = 1;

  // Throws std::invalid_argument unless genus >= 0 and degree >= 1.
  HurwitzQuery(int genus_, int degree_);

  int transpositions() const noexcept { return 2 * degree + 2 * genus - 2; }
};

struct TupleCount {
  BigInt value     = 0;
  bool   connected = true;

  friend bool operator==(TupleCount const&, TupleCount const&) = default;
};

// entries[mu] is the number of tuples whose product is one fixed permutation
// of cycle type mu.
struct ClassVector {
  int                         degree = 0;
  std::map<Partition, BigInt> entries;

  BigInt const& at(Partition const& mu) const { return entries.at(mu); }
};

struct EngineOptions {
  std::uint64_t cap = kDefaultCap;
};

// Upper bound on the number of search nodes the brute-force engine may visit
// for (d, r): sum_{i=0}^{r} C(d,2)^i, saturated at UINT64_MAX.
std::uint64_t brute_force_node_bound(int d, int r);

bool brute_force_feasible(int d, int r, std::uint64_t cap = kDefaultCap);

// Number of r-tuples of transpositions in S_d with product 1, optionally
// requiring transitivity on {1..d}. Throws CapExceeded when
// brute_force_node_bound(d, r) exceeds cap.
BigInt brute_force_count(int d, int r, bool require_transitive,
                         std::uint64_t cap = kDefaultCap);

// Frobenius character sum. d = 0 gives 1 if r = 0 and 0 otherwise.
BigInt disconnected_count(int d, int r);

// disconnected_count(d, s) for s = 0..r.
std::vector<BigInt> disconnected_series(int d, int r);

ClassVector cut_and_join_walk(int d, int r);

// entries[1^d] of the walk after each step s = 0..r.
std::vector<BigInt> cut_and_join_identity_series(int d, int r);

// D[k][s] for k = 0..d, s = 0..r.
using DisconnectedTable = std::vector<std::vector<BigInt>>;

DisconnectedTable disconnected_table(int d, int r, Method engine);

// Transitive count from a table of disconnected counts, by splitting off the
// orbit of letter 1:
//   C(n,s) = D(n,s) - sum_{k<n} sum_{t<=s} C(n-1,k-1) C(s,t) C(k,t) D(n-k,s-t).
// Returns C(d, r). The table must cover k <= d, s <= r.
BigInt connected_from_table(DisconnectedTable const& table, int d, int r);

// connected_from_table on the character engine.
BigInt connected_count(int d, int r);

// h_{g,1^d}. Auto runs brute force alongside the character engine when
// feasible and characters alone otherwise; All runs every feasible engine.
// Throws MethodDisagreement if two engines differ and CapExceeded for Brute
// when the instance is too large.
TupleCount hurwitz_simple(HurwitzQuery const& q, Method method = Method::Auto,
                          EngineOptions const& opts = {});

struct EngineResult {
  Method method;
  BigInt value;
};

// Runs the engines selected by method and returns each result in a fixed
// order (brute, characters, cutjoin). Does not check agreement; brute force
// is omitted when infeasible, except for Method::Brute, which throws.
std::vector<EngineResult> run_engines(HurwitzQuery const& q, Method method,
                                      EngineOptions const& opts = {});

// h_{g,1^d} / d!, the automorphism-weighted number of covers.
Rational pair_count(HurwitzQuery const& q, Method method = Method::Auto,
                    EngineOptions const& opts = {});

}  // namespace hsnum

#endif  // HSNUM_HURWITZ_HPP_
