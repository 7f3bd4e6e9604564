#include "sigshift/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigshift {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be positive");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

Count binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  Count result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= Count(n - r + i);
    result /= Count(i);
  }
  return result;
}

Count integer_power(std::uint64_t base, std::uint64_t exponent) {
  Count result = 1;
  Count b(base);
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Count primitive_word_count(int alphabet, std::uint64_t length) {
  if (alphabet < 1) throw std::invalid_argument("primitive_word_count: alphabet too small");
  if (length == 0) throw std::invalid_argument("primitive_word_count: length must be positive");
  Count total = 0;
  for (std::uint64_t d : divisors(length)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    total += Count(mu) * integer_power(static_cast<std::uint64_t>(alphabet), length / d);
  }
  Count per_class = total / Count(length);
  if (per_class * Count(length) != total) {
    throw std::logic_error("primitive_word_count: divisor sum not divisible by length");
  }
  return per_class;
}

std::vector<Word> enumerate_necklaces(int alphabet, std::size_t length) {
  if (alphabet < 1) throw std::invalid_argument("enumerate_necklaces: alphabet too small");
  if (length == 0) throw std::invalid_argument("enumerate_necklaces: length must be positive");
  std::vector<Word> out;
  const Letter top = static_cast<Letter>(alphabet - 1);
  std::vector<Letter> w{0};
  while (true) {
    if (w.size() == length) out.emplace_back(w, alphabet);
    std::vector<Letter> t;
    t.reserve(length);
    for (std::size_t i = 0; i < length; ++i) t.push_back(w[i % w.size()]);
    while (!t.empty() && t.back() == top) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = std::move(t);
  }
  return out;
}

}  // namespace sigshift
