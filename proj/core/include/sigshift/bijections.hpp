#pragma once

#include <vector>

#include "sigshift/permutation.hpp"
#include "sigshift/shift.hpp"

namespace sigshift {

struct DeltaInput {
  /// An n-cycle whose descent set is contained in D.
  Permutation tau;
  /// Sorted cut positions in [1, n-1]; |D| + 1 is the working alphabet size.
  std::vector<int> D;
};

struct DeltaTrace {
  Permutation pi;        // canonical preimage of tau under hat
  PeriodicWord word;     // word induced by the cuts D
  Permutation pi_prime;  // its orbit pattern under the all-minus signature
  Permutation image;     // hat(pi_prime) = delta(tau)
};

/// Descent-to-ascent correspondence on cycles: sends {tau : Des(tau) <= D}
/// bijectively onto {tau : Asc(tau) <= D}.  Defined for lengths with
/// n mod 4 != 2.
Permutation delta(const DeltaInput& input);
DeltaTrace delta_trace(const DeltaInput& input);

/// Doubling construction: interleaves 2*rho_i - 1 and 2*rho_i into a
/// permutation of length 2r whose hat image has the same ascent count as
/// hat(rho).  Requires odd r; the output is never a realizable pattern of
/// the all-minus shift.
Permutation rho_to_pi(const Permutation& rho);

/// Halving map, inverse to rho_to_pi up to half-rotation: for a
/// non-realizable pi of length n = 2 (mod 4) whose hat image has exactly
/// k-1 ascents, the unique all-minus segmentation induces a square word
/// q*q; returns the orbit pattern of q.  Exactly two half-rotated copies of
/// pi share each image.
Permutation phi(const Permutation& pi, int alphabet);

}  // namespace sigshift
