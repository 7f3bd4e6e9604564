#include "sigshift/interval_map.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sigshift/counting.hpp"

namespace sigshift {

namespace {

constexpr double kCollisionTolerance = 1e-9;

int branch_of(int k, double x) {
  if (x >= 1.0) return k - 1;
  int t = static_cast<int>(x * k);
  if (t > k - 1) t = k - 1;
  if (t < 0) t = 0;
  return t;
}

}  // namespace

double eval_map(const Signature& sigma, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("point outside [0,1]");
  }
  const int k = sigma.alphabet();
  const int t = branch_of(k, x);
  if (sigma.is_negative(t)) return static_cast<double>(t) + 1.0 - k * x;
  return k * x - static_cast<double>(t);
}

Rational eval_map_exact(const Signature& sigma, const Rational& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("point outside [0,1]");
  const int k = sigma.alphabet();
  int t;
  if (x == 1) {
    t = k - 1;
  } else {
    Rational scaled = x * k;
    t = static_cast<int>(boost::multiprecision::numerator(scaled) /
                         boost::multiprecision::denominator(scaled));
    if (t > k - 1) t = k - 1;
  }
  if (sigma.is_negative(t)) return Rational(t + 1) - Rational(k) * x;
  return Rational(k) * x - Rational(t);
}

Rational word_to_point_exact(const UltimatelyPeriodicWord& s, int alphabet) {
  if (alphabet < 2) throw std::invalid_argument("alphabet too small");
  const Word& pre = s.preperiod();
  const Word& cyc = s.cycle();
  for (std::size_t i = 0; i < pre.size(); ++i) {
    if (static_cast<int>(pre[i]) >= alphabet) throw std::invalid_argument("alphabet mismatch");
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (static_cast<int>(cyc[i]) >= alphabet) throw std::invalid_argument("alphabet mismatch");
  }
  const std::size_t p = pre.size();
  const std::size_t c = cyc.size();

  Count pre_digits = 0;
  for (std::size_t i = 0; i < p; ++i) {
    pre_digits = pre_digits * alphabet + Count(static_cast<int>(pre[i]));
  }
  Count cyc_digits = 0;
  for (std::size_t i = 0; i < c; ++i) {
    cyc_digits = cyc_digits * alphabet + Count(static_cast<int>(cyc[i]));
  }
  const Count kp = integer_power(static_cast<std::uint64_t>(alphabet), p);
  const Count kc = integer_power(static_cast<std::uint64_t>(alphabet), c);
  // 0.(pre)(cyc)(cyc)... = pre_digits/k^p + cyc_digits/(k^c - 1)/k^p
  Rational value(pre_digits, kp);
  value += Rational(cyc_digits, (kc - 1) * kp);
  return value;
}

double word_to_point(const UltimatelyPeriodicWord& s, int alphabet) {
  return word_to_point_exact(s, alphabet).convert_to<double>();
}

std::optional<Permutation> float_orbit_pattern(const Signature& sigma, double x, int n) {
  if (n < 1) throw std::invalid_argument("pattern length must be positive");
  std::vector<double> orbit;
  orbit.reserve(static_cast<std::size_t>(n));
  double cur = x;
  for (int i = 0; i < n; ++i) {
    orbit.push_back(cur);
    cur = eval_map(sigma, cur);
  }
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t j = i + 1; j < orbit.size(); ++j) {
      if (std::fabs(orbit[i] - orbit[j]) < kCollisionTolerance) return std::nullopt;
    }
  }
  return reduce(orbit);
}

}  // namespace sigshift
