#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigshift/signature.hpp"

namespace sigshift {

/// Permutation of {1, ..., n} in one-line notation.  Positions and values
/// are 1-based throughout: pi[i] is the image of position i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// Accepts either a digit string ("165398427", entries 1..9) or a
  /// comma-separated list ("1,8,9,4,5,2,7,10,3,6").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }

  /// Value at 1-based position i.
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  /// 1-based position of value v.
  int position_of(int v) const;

  const std::vector<int>& entries() const { return entries_; }

  /// Rotation starting at 1-based position i: pi_i ... pi_n pi_1 ... pi_(i-1).
  Permutation rotated(int i) const;

  /// Entrywise map pi_i -> n+1-pi_i.
  Permutation complemented() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// Pattern (order type) of a sequence of distinct values.  Throws when two
/// values compare equal.
template <typename T>
Permutation reduce(const std::vector<T>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> index(n);
  for (std::size_t i = 0; i < n; ++i) index[i] = i;
  std::sort(index.begin(), index.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t r = 1; r < n; ++r) {
    if (!(values[index[r - 1]] < values[index[r]])) {
      throw std::invalid_argument("not reducible");
    }
  }
  std::vector<int> one_line(n);
  for (std::size_t r = 0; r < n; ++r) {
    one_line[index[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(one_line));
}

/// Successor-permutation of pi: maps pi_i to pi_(i+1), cyclically.  The
/// result is an n-cycle whenever pi is read as the orbit order of a point.
Permutation hat(const Permutation& pi);

/// True when the functional digraph of pi is a single n-cycle.
bool is_cyclic(const Permutation& pi);

/// Positions i in [1, n-1] with pi_i > pi_(i+1).
std::vector<int> descent_set(const Permutation& pi);
/// Positions i in [1, n-1] with pi_i < pi_(i+1).
std::vector<int> ascent_set(const Permutation& pi);

/// Classical pattern containment: some subsequence of tau reduces to rho.
bool contains_pattern(const Permutation& tau, const Permutation& rho);

/// Rotation class of a permutation, canonically represented by the rotation
/// whose first entry is 1.
class CyclicClass {
 public:
  explicit CyclicClass(const Permutation& member);

  const Permutation& representative() const { return representative_; }
  int size() const { return representative_.size(); }
  std::vector<Permutation> members() const;

  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
  friend std::strong_ordering operator<=>(const CyclicClass& a, const CyclicClass& b) {
    return a.representative_ <=> b.representative_;
  }

 private:
  Permutation representative_;
};

/// Inverse of the hat map on rotation classes: recovers the class whose hat
/// image is the given n-cycle by following the cycle starting from 1.
/// Throws "not a cycle" when tau is not a single n-cycle.
CyclicClass theta_inverse(const Permutation& tau);

/// Weakly increasing cut positions 0 = e_0 <= e_1 <= ... <= e_k splitting
/// {1, ..., e_k} into k possibly empty segments (e_t, e_(t+1)].
class Segmentation {
 public:
  explicit Segmentation(std::vector<int> cuts);

  int segments() const { return static_cast<int>(cuts_.size()) - 1; }
  int cut(int t) const { return cuts_[static_cast<std::size_t>(t)]; }
  int total() const { return cuts_.back(); }
  const std::vector<int>& cuts() const { return cuts_; }

  /// Index t of the segment with cut(t) < v <= cut(t+1).
  int segment_of(int v) const;

  std::string str() const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;

 private:
  std::vector<int> cuts_;
};

/// All segmentations of tau into segments() = alphabet blocks where block t
/// is increasing for positive letters and decreasing for negative ones.
/// Returned in lexicographic order of the cut sequences.
std::vector<Segmentation> sigma_segmentations(const Permutation& tau, const Signature& sigma);

}  // namespace sigshift
