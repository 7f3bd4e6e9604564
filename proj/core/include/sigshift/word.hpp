#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sigshift {

using Letter = std::uint8_t;

/// Finite word over the alphabet {0, ..., k-1}.
///
/// The alphabet size travels with the word so that operations such as
/// complementation and numeric evaluation are well defined.  A word may be
/// empty (used for trivial preperiods); most callers work with nonempty
/// words.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet);

  /// Parses a word literal.  For alphabets of size at most 10 the letters
  /// are consecutive digits ("00110221"); larger alphabets use
  /// comma-separated values ("0,11,3").
  static Word parse(std::string_view text, int alphabet);

  int alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// First `count` letters.
  Word prefix(std::size_t count) const;
  /// Cyclic left rotation by `r` positions.
  Word rotated_left(std::size_t r) const;
  /// Letterwise map a -> k-1-a.
  Word complemented() const;
  Word appended(const Word& tail) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
    return a.alphabet_ <=> b.alphabet_;
  }

 private:
  std::vector<Letter> letters_;
  int alphabet_ = 0;
};

/// Smallest d dividing |w| such that w is the (|w|/d)-fold repetition of its
/// first d letters.
std::size_t primitive_period(const Word& w);

/// True when the word equals no proper power of a shorter word.
bool is_primitive(const Word& w);

/// Lexicographically least cyclic rotation; canonical representative of the
/// rotation class of `w`.
Word canonical_rotation(const Word& w);

}  // namespace sigshift
