#include "sigshift/shift.hpp"

#include <numeric>
#include <stdexcept>

namespace sigshift {

PeriodicWord::PeriodicWord(Word base) : base_(std::move(base)) {
  if (base_.empty()) throw std::invalid_argument("invalid word: empty period");
  if (!is_primitive(base_)) throw std::invalid_argument("word not primitive");
}

UltimatelyPeriodicWord::UltimatelyPeriodicWord(Word preperiod, Word cycle)
    : preperiod_(std::move(preperiod)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("invalid word: empty cycle");
  if (!preperiod_.empty() && preperiod_.alphabet() != cycle_.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  if (preperiod_.empty() && preperiod_.alphabet() != cycle_.alphabet()) {
    preperiod_ = Word({}, cycle_.alphabet());
  }
  std::size_t root = primitive_period(cycle_);
  if (root < cycle_.size()) cycle_ = cycle_.prefix(root);
  // Absorb preperiod letters that merely restate the cycle: u x (w x)^inf
  // equals u (x w)^inf.
  while (!preperiod_.empty() &&
         preperiod_[preperiod_.size() - 1] == cycle_[cycle_.size() - 1]) {
    std::vector<Letter> pre(preperiod_.letters().begin(), preperiod_.letters().end() - 1);
    preperiod_ = Word(std::move(pre), preperiod_.alphabet());
    cycle_ = cycle_.rotated_left(cycle_.size() - 1);
  }
}

Letter UltimatelyPeriodicWord::letter(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("letter positions are 1-based");
  const std::size_t p = preperiod_.size();
  if (i <= p) return preperiod_[i - 1];
  return cycle_[(i - p - 1) % cycle_.size()];
}

Word UltimatelyPeriodicWord::prefix_word(std::size_t count) const {
  std::vector<Letter> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(letter(i));
  return Word(std::move(out), alphabet());
}

std::string UltimatelyPeriodicWord::str() const {
  if (purely_periodic()) return "(" + cycle_.str() + ")*";
  return preperiod_.str() + "(" + cycle_.str() + ")*";
}

std::strong_ordering compare_sigma(const UltimatelyPeriodicWord& a,
                                   const UltimatelyPeriodicWord& b,
                                   const Signature& sigma) {
  if (a.alphabet() != sigma.alphabet() || b.alphabet() != sigma.alphabet()) {
    throw std::invalid_argument("alphabet mismatch");
  }
  if (a == b) return std::strong_ordering::equal;
  // Two distinct canonical forms must disagree within the joint preperiod
  // plus one least common multiple of the cycle lengths.
  const std::size_t pre = std::max(a.preperiod().size(), b.preperiod().size());
  const std::size_t bound =
      pre + 2 * std::lcm(a.cycle().size(), b.cycle().size());
  bool flipped = false;
  for (std::size_t i = 1; i <= bound; ++i) {
    const Letter x = a.letter(i);
    const Letter y = b.letter(i);
    if (x != y) {
      const bool less = (x < y) != flipped;
      return less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (sigma.is_negative(x)) flipped = !flipped;
  }
  throw std::logic_error("compare_sigma: distinct words agree past the periodic bound");
}

UltimatelyPeriodicWord apply_signed_shift(const UltimatelyPeriodicWord& s,
                                          const Signature& sigma, ShiftForm form) {
  if (s.alphabet() != sigma.alphabet()) throw std::invalid_argument("alphabet mismatch");
  const Letter head = s.letter(1);
  Word pre = s.preperiod();
  Word cyc = s.cycle();
  if (!pre.empty()) {
    std::vector<Letter> rest(pre.letters().begin() + 1, pre.letters().end());
    pre = Word(std::move(rest), pre.alphabet());
  } else {
    cyc = cyc.rotated_left(1);
  }
  if (form == ShiftForm::complementing && sigma.is_negative(head)) {
    pre = pre.empty() ? pre : pre.complemented();
    cyc = cyc.complemented();
  }
  return UltimatelyPeriodicWord(std::move(pre), std::move(cyc));
}

Word psi_prefix(const UltimatelyPeriodicWord& s, const Signature& sigma, std::size_t count) {
  if (s.alphabet() != sigma.alphabet()) throw std::invalid_argument("alphabet mismatch");
  const int k = sigma.alphabet();
  std::vector<Letter> out;
  out.reserve(count);
  bool flipped = false;
  for (std::size_t i = 1; i <= count; ++i) {
    const Letter x = s.letter(i);
    out.push_back(flipped ? static_cast<Letter>(k - 1 - x) : x);
    if (sigma.is_negative(x)) flipped = !flipped;
  }
  return Word(std::move(out), k);
}

UltimatelyPeriodicWord psi(const UltimatelyPeriodicWord& s, const Signature& sigma) {
  if (s.alphabet() != sigma.alphabet()) throw std::invalid_argument("alphabet mismatch");
  const std::size_t p = s.preperiod().size();
  const std::size_t c = s.cycle().size();
  int negatives_in_cycle = 0;
  for (std::size_t i = 0; i < c; ++i) {
    if (sigma.is_negative(s.cycle()[i])) ++negatives_in_cycle;
  }
  // After the preperiod the flip state advances by the cycle's negative count
  // per pass, so the image cycle closes after one pass (even count) or two.
  const std::size_t span = (negatives_in_cycle % 2 == 0) ? c : 2 * c;
  Word image = psi_prefix(s, sigma, p + span);
  std::vector<Letter> pre_letters(image.letters().begin(), image.letters().begin() + p);
  std::vector<Letter> cycle_letters(image.letters().begin() + p, image.letters().end());
  return UltimatelyPeriodicWord(Word(std::move(pre_letters), sigma.alphabet()),
                                Word(std::move(cycle_letters), sigma.alphabet()));
}

Permutation orbit_pattern(const PeriodicWord& s, const Signature& sigma) {
  if (s.alphabet() != sigma.alphabet()) throw std::invalid_argument("alphabet mismatch");
  const std::size_t n = s.period();
  std::vector<UltimatelyPeriodicWord> shifts;
  shifts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    shifts.push_back(UltimatelyPeriodicWord::periodic(s.base().rotated_left(i)));
  }
  std::vector<int> ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    int rank = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      auto c = compare_sigma(shifts[j], shifts[i], sigma);
      if (c == std::strong_ordering::equal) {
        throw std::logic_error("orbit_pattern: shifts of a primitive word collide");
      }
      if (c == std::strong_ordering::less) ++rank;
    }
    ranks[i] = rank;
  }
  return Permutation(std::move(ranks));
}

std::optional<Permutation> pattern_prefix(const UltimatelyPeriodicWord& s,
                                          const Signature& sigma, int length) {
  if (length < 1) throw std::invalid_argument("pattern length must be positive");
  std::vector<UltimatelyPeriodicWord> shifts;
  shifts.reserve(static_cast<std::size_t>(length));
  UltimatelyPeriodicWord cur = s;
  for (int i = 0; i < length; ++i) {
    shifts.push_back(cur);
    cur = apply_signed_shift(cur, sigma, ShiftForm::plain);
  }
  std::vector<int> ranks(static_cast<std::size_t>(length));
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    int rank = 1;
    for (std::size_t j = 0; j < shifts.size(); ++j) {
      if (j == i) continue;
      auto c = compare_sigma(shifts[j], shifts[i], sigma);
      if (c == std::strong_ordering::equal) return std::nullopt;
      if (c == std::strong_ordering::less) ++rank;
    }
    ranks[i] = rank;
  }
  return Permutation(std::move(ranks));
}

}  // namespace sigshift
