#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "sigshift/permutation.hpp"
#include "sigshift/signature.hpp"
#include "sigshift/word.hpp"

namespace sigshift {

/// Periodic infinite word b^inf for a primitive base b.  Primitivity makes
/// the base the unique shortest period, so equality of values is equality of
/// bases.
class PeriodicWord {
 public:
  explicit PeriodicWord(Word base);

  const Word& base() const { return base_; }
  std::size_t period() const { return base_.size(); }
  int alphabet() const { return base_.alphabet(); }

  /// The shift-by-i image (drop i leading letters), again periodic.
  PeriodicWord shifted(std::size_t i) const { return PeriodicWord(base_.rotated_left(i)); }

  /// 1-based letter access into the infinite word.
  Letter letter(std::size_t i) const { return base_[(i - 1) % period()]; }

  std::string str() const { return base_.str(); }

  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
  friend std::strong_ordering operator<=>(const PeriodicWord& a, const PeriodicWord& b) {
    return a.base_ <=> b.base_;
  }

 private:
  Word base_;
};

/// Eventually periodic infinite word u v^inf, kept in canonical form: the
/// cycle v is primitive and the preperiod u is shortest (u never ends with
/// the letter that v ends with).  Canonical forms make operator== decide
/// equality of the underlying infinite words.
class UltimatelyPeriodicWord {
 public:
  UltimatelyPeriodicWord(Word preperiod, Word cycle);

  static UltimatelyPeriodicWord periodic(const Word& cycle) {
    return UltimatelyPeriodicWord(Word(), cycle);
  }
  explicit UltimatelyPeriodicWord(const PeriodicWord& w)
      : UltimatelyPeriodicWord(Word(), w.base()) {}

  const Word& preperiod() const { return preperiod_; }
  const Word& cycle() const { return cycle_; }
  int alphabet() const { return cycle_.alphabet(); }
  bool purely_periodic() const { return preperiod_.empty(); }

  /// 1-based letter access into the infinite word.
  Letter letter(std::size_t i) const;

  /// Word made of the first `count` letters.
  Word prefix_word(std::size_t count) const;

  std::string str() const;

  friend bool operator==(const UltimatelyPeriodicWord&, const UltimatelyPeriodicWord&) = default;

 private:
  Word preperiod_;
  Word cycle_;
};

/// Linear order on infinite words induced by a signature: at the first
/// disagreement, letter order is kept or reversed according to the parity of
/// decreasing letters seen in the common prefix.
std::strong_ordering compare_sigma(const UltimatelyPeriodicWord& a,
                                   const UltimatelyPeriodicWord& b,
                                   const Signature& sigma);

enum class ShiftForm {
  plain,          // drop the first letter
  complementing,  // drop the first letter; complement the tail if it was decreasing
};

UltimatelyPeriodicWord apply_signed_shift(const UltimatelyPeriodicWord& s,
                                          const Signature& sigma, ShiftForm form);

/// First `count` letters of the order-preserving conjugacy psi between the
/// plain and complementing shift actions: letter i is complemented when an
/// odd number of decreasing letters precede it.
Word psi_prefix(const UltimatelyPeriodicWord& s, const Signature& sigma, std::size_t count);

/// Whole image of s under psi, again eventually periodic.
UltimatelyPeriodicWord psi(const UltimatelyPeriodicWord& s, const Signature& sigma);

/// Pattern of the n shifted copies of an n-periodic word under the signature
/// order; the result is a permutation of {1, ..., n} whose rotation class is
/// the pattern class realized by the word.
Permutation orbit_pattern(const PeriodicWord& s, const Signature& sigma);

/// Pattern of the first `length` shifts of an arbitrary eventually periodic
/// word; empty when two shifts coincide, which makes the pattern undefined.
std::optional<Permutation> pattern_prefix(const UltimatelyPeriodicWord& s,
                                          const Signature& sigma, int length);

}  // namespace sigshift
