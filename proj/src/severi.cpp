#include "hsnum/severi.hpp"

namespace hsnum {

namespace {

long long choose2(long long n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

}  // namespace

SeveriTriple::SeveriTriple(int g_, int d_, int l_) : g(g_), d(d_), l(l_) {
  if (g < 0 || d < 1 || l < 0) {
    throw std::invalid_argument("invalid triple " + to_string()
                                + ": need g >= 0, d >= 1, l >= 0");
  }
}

std::string SeveriTriple::to_string() const {
  return "(" + std::to_string(g) + "," + std::to_string(d) + ","
         + std::to_string(l) + ")";
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Bendable:
      return "bendable";
    case Kind::SemiBendable:
      return "semi-bendable";
    case Kind::Unbendable:
      return "unbendable";
  }
  return "?";
}

std::string_view kind_label(Classification const& c) {
  if (c.kind == Kind::Bendable && c.strongly_bendable) {
    return "strongly bendable";
  }
  return to_string(c.kind);
}

bool is_nonempty(SeveriTriple const& t) {
  return t.g <= choose2(t.d + t.l - 1) - choose2(t.l);
}

long long node_count(SeveriTriple const& t) {
  return choose2(t.d - 1) + static_cast<long long>(t.l) * (t.d - 1) - t.g;
}

Dimensions dims(SeveriTriple const& t) {
  long long const dim_W = 3LL * t.d + 2LL * t.l + t.g - 1;
  long long const dim_P
      = 2LL * t.d + 2LL * t.g - 2 + t.l + node_count(t);
  return {dim_W, dim_W - 3, dim_P};
}

long long node_line_budget(SeveriTriple const& t) {
  return static_cast<long long>(t.d) + t.l - t.g - 2;
}

long long local_tangent_budget(SeveriTriple const& t) {
  return static_cast<long long>(t.d) + 2LL * t.l - t.g - 2;
}

Classification classify(SeveriTriple const& t) {
  Classification c;
  c.nonempty = is_nonempty(t);
  if (t.d + t.l >= t.g + 2) {
    c.kind = Kind::Bendable;
  } else if (t.g + 2 <= t.d + 2 * t.l) {
    c.kind = Kind::SemiBendable;
  } else {
    c.kind = Kind::Unbendable;
  }
  c.strongly_bendable = c.nonempty && t.d >= 2
                        && (t.d - 2) * (t.d + 2 * t.l - 3) == 0;
  return c;
}

HurwitzProvider engine_provider(Method method, EngineOptions opts) {
  return [method, opts](HurwitzQuery const& q) {
    return hurwitz_simple(q, method, opts);
  };
}

HSValue hs_number(SeveriTriple const& t, HurwitzProvider const& provider) {
  Classification const c = classify(t);
  if (!c.nonempty) {
    throw EmptyVariety("no curves for triple " + t.to_string() + ": g = "
                       + std::to_string(t.g) + " exceeds C(d+l-1,2) - C(l,2)");
  }
  if (c.kind == Kind::Unbendable) {
    throw UnbendableUnsupported(
        "triple " + t.to_string()
        + " is unbendable (d + 2l < g + 2); this case is still widely open "
          "and has no reduction to Hurwitz numbers, other techniques are "
          "needed");
  }
  if (t.d == 1) {
    throw DegenerateProjection("triple " + t.to_string()
                               + " has a degree-1 projection; no simply "
                                 "branched covers to count");
  }

  HSValue out;
  out.classification = c;
  out.hurwitz_input  = provider(HurwitzQuery(t.g, t.d));

  BigInt factor;
  if (c.kind == Kind::Bendable) {
    factor = power(BigInt(t.d) * (t.d - 1) / 2,
                   static_cast<unsigned>(node_line_budget(t)))
             * power(BigInt(t.d), static_cast<unsigned>(t.l));
  } else {
    long long const top    = 2LL * t.g - t.d - t.l - 1;
    long long const bottom = static_cast<long long>(t.g) - 3;
    if (bottom < 0) {
      out.warnings.push_back("binomial C(" + std::to_string(top) + ","
                             + std::to_string(bottom)
                             + ") has negative lower index; taken as 0");
    }
    factor = power(BigInt(t.d), static_cast<unsigned>(local_tangent_budget(t)))
             * binomial(top, bottom);
  }
  out.value = Rational(factor * out.hurwitz_input.value,
                       factorial(static_cast<unsigned>(t.d)));
  out.integral = is_integral(out.value);
  if (!out.integral) {
    out.warnings.push_back("value " + to_string(out.value)
                           + " is not an integer");
  }
  return out;
}

HSValue hs_number(SeveriTriple const& t) {
  return hs_number(t, engine_provider());
}

}  // namespace hsnum
