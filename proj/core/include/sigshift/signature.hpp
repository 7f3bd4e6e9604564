#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigshift {

/// Sign pattern over the alphabet {0, ..., k-1}: each letter is marked
/// increasing (+) or decreasing (-).  Written as a string such as "+--".
class Signature {
 public:
  explicit Signature(std::vector<bool> negative) : negative_(std::move(negative)) {
    if (negative_.size() < 2) {
      throw std::invalid_argument("invalid signature: need at least two letters");
    }
  }

  static Signature parse(std::string_view text) {
    std::vector<bool> negative;
    negative.reserve(text.size());
    for (char c : text) {
      if (c == '+') {
        negative.push_back(false);
      } else if (c == '-') {
        negative.push_back(true);
      } else {
        throw std::invalid_argument("invalid signature: expected only '+' and '-'");
      }
    }
    return Signature(std::move(negative));
  }

  static Signature all_plus(int alphabet) {
    return Signature(std::vector<bool>(check_size(alphabet), false));
  }
  static Signature all_minus(int alphabet) {
    return Signature(std::vector<bool>(check_size(alphabet), true));
  }

  int alphabet() const { return static_cast<int>(negative_.size()); }

  bool is_negative(int letter) const {
    if (letter < 0 || letter >= alphabet()) {
      throw std::invalid_argument("invalid signature index");
    }
    return negative_[static_cast<std::size_t>(letter)];
  }
  bool is_positive(int letter) const { return !is_negative(letter); }

  bool all_positive() const {
    for (bool b : negative_) {
      if (b) return false;
    }
    return true;
  }
  bool all_negative() const {
    for (bool b : negative_) {
      if (!b) return false;
    }
    return true;
  }

  int negative_count() const {
    int c = 0;
    for (bool b : negative_) c += b ? 1 : 0;
    return c;
  }

  /// Signature read back to front.  Complementing every letter of a word
  /// swaps branch t with branch k-1-t, so orbits of the complemented word
  /// follow the reversed signature.
  Signature reversed() const {
    return Signature(std::vector<bool>(negative_.rbegin(), negative_.rend()));
  }

  std::string str() const {
    std::string out;
    out.reserve(negative_.size());
    for (bool b : negative_) out.push_back(b ? '-' : '+');
    return out;
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  static std::size_t check_size(int alphabet) {
    if (alphabet < 2) {
      throw std::invalid_argument("invalid signature: need at least two letters");
    }
    return static_cast<std::size_t>(alphabet);
  }

  std::vector<bool> negative_;
};

}  // namespace sigshift
