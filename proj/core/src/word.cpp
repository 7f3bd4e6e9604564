#include "sigshift/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sigshift {

namespace {

[[noreturn]] void bad_word(const std::string& why) {
  throw std::invalid_argument("invalid word: " + why);
}

}  // namespace

Word::Word(std::vector<Letter> letters, int alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  if (alphabet_ < 1) bad_word("alphabet size must be at least 1");
  for (Letter a : letters_) {
    if (static_cast<int>(a) >= alphabet_) bad_word("letter out of range");
  }
}

Word Word::parse(std::string_view text, int alphabet) {
  if (alphabet < 1) bad_word("alphabet size must be at least 1");
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos && alphabet <= 10) {
    letters.reserve(text.size());
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '0' || c > '9') bad_word("expected digit letters");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view field = text.substr(pos, next - pos);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int value = -1;
      auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || p != field.data() + field.size()) {
        bad_word("expected comma-separated letters");
      }
      if (value < 0 || value > 255) bad_word("letter out of range");
      letters.push_back(static_cast<Letter>(value));
      pos = next + 1;
      if (next == text.size()) break;
    }
  }
  if (letters.empty()) bad_word("empty literal");
  return Word(std::move(letters), alphabet);
}

Word Word::prefix(std::size_t count) const {
  if (count > size()) bad_word("prefix longer than word");
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + count), alphabet_);
}

Word Word::rotated_left(std::size_t r) const {
  if (empty()) return *this;
  r %= size();
  std::vector<Letter> out;
  out.reserve(size());
  out.insert(out.end(), letters_.begin() + r, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + r);
  return Word(std::move(out), alphabet_);
}

Word Word::complemented() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (Letter a : letters_) out.push_back(static_cast<Letter>(alphabet_ - 1 - a));
  return Word(std::move(out), alphabet_);
}

Word Word::appended(const Word& tail) const {
  if (!tail.empty() && !empty() && tail.alphabet_ != alphabet_) {
    bad_word("alphabet mismatch");
  }
  std::vector<Letter> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out), empty() ? tail.alphabet_ : alphabet_);
}

std::string Word::str() const {
  std::string out;
  if (alphabet_ <= 10) {
    out.reserve(size());
    for (Letter a : letters_) out.push_back(static_cast<char>('0' + a));
  } else {
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(static_cast<int>(letters_[i]));
    }
  }
  return out;
}

std::size_t primitive_period(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("invalid word: empty word has no period");
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n; ++i) {
      if (w[i] != w[i - d]) {
        periodic = false;
        break;
      }
    }
    if (periodic) return d;
  }
  return n;
}

bool is_primitive(const Word& w) { return primitive_period(w) == w.size(); }

Word canonical_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word candidate = w.rotated_left(r);
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace sigshift
