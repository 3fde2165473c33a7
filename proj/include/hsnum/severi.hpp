#ifndef HSNUM_SEVERI_HPP_
#define HSNUM_SEVERI_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsnum/bigint.hpp"
#include "hsnum/hurwitz.hpp"

namespace hsnum {

// Plane curves of degree d + l and geometric genus g with an l-fold ordinary
// point at a fixed p and ordinary nodes elsewhere; d is the degree of the
// projection from p.
struct SeveriTriple {
  int g = 0;
  int d = 1;
  int l = 0;

  // Throws std::invalid_argument unless g >= 0, d >= 1, l >= 0.
  SeveriTriple(int g_, int d_, int l_);

  std::string to_string() const;

  friend bool operator==(SeveriTriple const&, SeveriTriple const&) = default;
};

enum class Kind { Bendable, SemiBendable, Unbendable };

std::string_view to_string(Kind kind);

struct Classification {
  Kind kind              = Kind::Unbendable;
  bool strongly_bendable = false;
  bool nonempty          = false;

  friend bool operator==(Classification const&,
                         Classification const&) = default;
};

// "strongly bendable", "bendable", "semi-bendable" or "unbendable".
std::string_view kind_label(Classification const& c);

struct Dimensions {
  long long dim_W;        // the Severi variety
  long long dim_W_tilde;  // its quotient by the 3-dimensional group G
  long long dim_P;        // the target of the branching morphism

  friend bool operator==(Dimensions const&, Dimensions const&) = default;
};

// g <= C(d+l-1, 2) - C(l, 2).
bool is_nonempty(SeveriTriple const& t);

// Ordinary nodes away from p: C(d-1, 2) + l(d-1) - g. Negative exactly when
// the family is empty.
long long node_count(SeveriTriple const& t);

Dimensions dims(SeveriTriple const& t);

// Number of generic node-detecting lines imposed in the bendable case,
// d + l - g - 2.
long long node_line_budget(SeveriTriple const& t);

// Number of generic local tangents imposed in the semi-bendable case,
// d + 2l - g - 2.
long long local_tangent_budget(SeveriTriple const& t);

// Bendable iff d + l >= g + 2; semi-bendable iff d + l < g + 2 <= d + 2l;
// unbendable otherwise. Strongly bendable iff nonempty, d >= 2 and
// dim W~ = dim P, i.e. (d - 2)(d + 2l - 3) = 0.
Classification classify(SeveriTriple const& t);

class EmptyVariety : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnbendableUnsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateProjection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Supplies h_{g,1^d}. Injected so that callers can substitute fixed tables.
using HurwitzProvider = std::function<TupleCount(HurwitzQuery const&)>;

HurwitzProvider engine_provider(Method method = Method::Auto,
                                EngineOptions opts = {});

struct HSValue {
  Rational                 value;
  bool                     integral = true;
  Classification           classification;
  TupleCount               hurwitz_input;
  std::vector<std::string> warnings;
};

// Hurwitz-Severi number of a bendable or semi-bendable triple:
//
//   bendable       C(d,2)^{d+l-g-2} d^l h_{g,1^d} / d!
//   semi-bendable  d^{d+2l-g-2} C(2g-d-l-1, g-3) h_{g,1^d} / d!
//
// Throws EmptyVariety, UnbendableUnsupported, or DegenerateProjection (d = 1)
// in that order of precedence. Non-integral values are returned as they are.
HSValue hs_number(SeveriTriple const& t, HurwitzProvider const& provider);

HSValue hs_number(SeveriTriple const& t);

}  // namespace hsnum

#endif  // HSNUM_SEVERI_HPP_
