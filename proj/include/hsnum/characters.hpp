#ifndef HSNUM_CHARACTERS_HPP_
#define HSNUM_CHARACTERS_HPP_

#include "hsnum/bigint.hpp"
#include "hsnum/partitions.hpp"

namespace hsnum {

// chi^shape evaluated on the conjugacy class with cycle type class_profile.
struct CharacterQuery {
  Partition shape;
  Partition class_profile;

  // Throws std::invalid_argument when |shape| != |class_profile|.
  CharacterQuery(Partition shape_, Partition class_profile_);
};

// Irreducible character value by the Murnaghan-Nakayama rule: remove border
// strips of length equal to the largest remaining class part, each weighted
// by (-1)^(strip height). Memoized on (shape, remaining class).
BigInt mn_character(CharacterQuery const& q);

// Eigenvalue of the transposition class sum on the irreducible lambda, i.e.
// C(d,2) chi^lambda(2,1^{d-2}) / f^lambda. Equals the content sum; zero for
// d < 2.
BigInt central_char_transposition(Partition const& lambda);

}  // namespace hsnum

#endif  // HSNUM_CHARACTERS_HPP_
