#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sigshift/counting.hpp"
#include "sigshift/permutation.hpp"
#include "sigshift/shift.hpp"
#include "sigshift/signature.hpp"
#include "sigshift/word.hpp"

namespace sigshift {

/// Word reading off, for every position i, the index of the segment that
/// contains pi_i.  The cuts must end exactly at pi's length.
Word pi_monotone_word(const Permutation& pi, const Segmentation& cuts);

struct RealizabilityReport {
  Permutation pattern;
  Signature sigma;
  bool realizable = false;
  /// Primitive induced words, one per witnessing segmentation of hat(pi),
  /// sorted lexicographically.  Every witness w satisfies
  /// orbit_pattern(w, sigma) == pi.
  std::vector<PeriodicWord> witnesses;
  Count segmentations_tried = 0;
};

/// Decides whether pi occurs as the pattern of a periodic orbit of the
/// signed shift: scans the segmentations of hat(pi) and keeps those whose
/// induced word is primitive.
RealizabilityReport is_periodic_pattern(const Permutation& pi, const Signature& sigma);

/// Just the witnesses of is_periodic_pattern.
std::vector<PeriodicWord> realizing_words(const Permutation& pi, const Signature& sigma);

enum class EnumerationMethod {
  brute,             // walk all primitive necklaces and collect orbit patterns
  characterization,  // walk rotation-class representatives and test realizability
};

/// All pattern classes of n-periodic orbits, as a sorted set of rotation
/// classes.  Both methods must agree; brute is exponential in n while the
/// characterization route scans (n-1)! candidates.
std::set<CyclicClass> enumerate_periodic_classes(const Signature& sigma, int length,
                                                 EnumerationMethod method);

/// Number of such classes, via the characterization route.
Count count_periodic_classes(const Signature& sigma, int length);

}  // namespace sigshift
