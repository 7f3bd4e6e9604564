#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigshift/counting.hpp"
#include "sigshift/permutation.hpp"

namespace sigshift {

/// Number of length-n pattern classes of the tent map:
/// (1/2n) * sum over odd d | n of moebius(d) * 2^(n/d).
Count count_tent(int n);

/// Number of n-cycle rotation classes whose hat image has exactly k-1
/// descents, k possibly empty increasing segments.  Computed by the
/// subtraction recurrence anchored at C(n, 2) = primitive_word_count(2, n).
Count count_C(int n, int k);

/// Ascent-side analogue of count_C, with the corrected recurrence in the
/// n = 2 (mod 4) regime; elsewhere it coincides with count_C.
Count count_Cprime(int n, int k);

/// Number of length-n pattern classes of the k-letter shift:
/// sum of count_C(n, i) for i = 2..k.
Count p_shift(int n, int k);

/// Number of length-n pattern classes of the reverse k-letter shift.  Equals
/// p_shift except when n = 2 (mod 4), where the ascent-side table and a
/// half-length correction enter.
Count p_reverse(int n, int k);

enum class AvoidanceFamily {
  unimodal_213_312,     // cycles avoiding 213 and 312
  family_132_231,       // cycles avoiding 132 and 231
  family_321_2143_3142, // cycles avoiding 321, 2143 and 3142
  family_123_2413_3412, // cycles avoiding 123, 2413 and 3412
};

/// Parses "213,312" style family spellings.
AvoidanceFamily parse_family(std::string_view text);
std::vector<Permutation> family_patterns(AvoidanceFamily family);
std::string family_name(AvoidanceFamily family);

enum class CountMethod { formula, brute };

/// Number of n-cycles avoiding every pattern of the family.  The formula
/// route evaluates the closed forms; the brute route filters all n-cycles
/// and refuses lengths above brute_limit.
Count count_avoiding_cycles(int n, AvoidanceFamily family, CountMethod method,
                            int brute_limit = 9);

enum class Statistic { C, Cprime, p_shift, p_reverse, tent, necklace };

Statistic parse_statistic(std::string_view text);
std::string statistic_name(Statistic stat);

/// Rectangular table of one counting statistic over inclusive n and k
/// ranges.  Single-parameter statistics ignore k.
class CountTable {
 public:
  static CountTable build(Statistic stat, int n_lo, int n_hi, int k_lo, int k_hi);

  Statistic statistic() const { return stat_; }
  int n_lo() const { return n_lo_; }
  int n_hi() const { return n_hi_; }
  int k_lo() const { return k_lo_; }
  int k_hi() const { return k_hi_; }

  const Count& value(int n, int k) const;

  /// CSV with header "n,k,value,statistic", rows in (n, k) lexicographic
  /// order.
  std::string to_csv() const;

 private:
  CountTable(Statistic stat, int n_lo, int n_hi, int k_lo, int k_hi)
      : stat_(stat), n_lo_(n_lo), n_hi_(n_hi), k_lo_(k_lo), k_hi_(k_hi) {}

  Statistic stat_;
  int n_lo_, n_hi_, k_lo_, k_hi_;
  std::vector<Count> values_;
};

}  // namespace sigshift
