#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sigshift/interval_map.hpp"
#include "sigshift/periodic_patterns.hpp"

using sigshift::PeriodicWord;
using sigshift::Permutation;
using sigshift::Rational;
using sigshift::Signature;
using sigshift::UltimatelyPeriodicWord;
using sigshift::Word;

namespace {

UltimatelyPeriodicWord upw(const char* pre, const char* cycle, int alphabet) {
  Word head = *pre ? Word::parse(pre, alphabet) : Word({}, alphabet);
  return UltimatelyPeriodicWord(head, Word::parse(cycle, alphabet));
}

std::vector<Signature> all_signatures(int alphabet) {
  std::vector<Signature> out;
  for (int mask = 0; mask < (1 << alphabet); ++mask) {
    std::vector<bool> neg;
    for (int t = 0; t < alphabet; ++t) neg.push_back((mask >> t) & 1);
    out.push_back(Signature(neg));
  }
  return out;
}

}  // namespace

TEST_CASE("branch evaluation on tent and doubling maps") {
  Signature tent = Signature::parse("+-");
  CHECK(sigshift::eval_map(tent, 1.0 / 3) == doctest::Approx(2.0 / 3));
  CHECK(sigshift::eval_map(tent, 2.0 / 3) == doctest::Approx(2.0 / 3));
  CHECK(sigshift::eval_map(tent, 0.25) == doctest::Approx(0.5));
  CHECK(sigshift::eval_map(tent, 1.0) == doctest::Approx(0.0));

  Signature doubling = Signature::parse("++");
  CHECK(sigshift::eval_map(doubling, 0.0) == doctest::Approx(0.0));
  CHECK(sigshift::eval_map(doubling, 0.3) == doctest::Approx(0.6));
  CHECK(sigshift::eval_map(doubling, 0.75) == doctest::Approx(0.5));
  CHECK(sigshift::eval_map(doubling, 1.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(sigshift::eval_map(tent, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(sigshift::eval_map(tent, 1.1), std::invalid_argument);
}

TEST_CASE("exact evaluation agrees with the double route") {
  for (int k = 2; k <= 3; ++k) {
    for (const Signature& sigma : all_signatures(k)) {
      for (int num = 0; num <= 60; ++num) {
        Rational x(num, 60);
        Rational image = sigshift::eval_map_exact(sigma, x);
        CHECK(image >= 0);
        CHECK(image <= 1);
        double approx = sigshift::eval_map(sigma, static_cast<double>(num) / 60.0);
        CHECK(std::abs(approx - image.convert_to<double>()) < 1e-9);
      }
    }
  }
  CHECK(sigshift::eval_map_exact(Signature::parse("+-"), Rational(1)) == 0);
  CHECK(sigshift::eval_map_exact(Signature::parse("++"), Rational(1)) == 1);
}

TEST_CASE("branches are continuous and contained in the unit interval") {
  for (int k = 2; k <= 3; ++k) {
    for (const Signature& sigma : all_signatures(k)) {
      for (int t = 0; t < k; ++t) {
        double lo = static_cast<double>(t) / k;
        double hi = static_cast<double>(t + 1) / k;
        double prev = sigshift::eval_map(sigma, lo);
        for (int step = 1; step <= 64; ++step) {
          double x = lo + (hi - lo) * step / 65.0;
          double y = sigshift::eval_map(sigma, x);
          CHECK(y >= 0.0);
          CHECK(y <= 1.0);
          CHECK(std::abs(y - prev) <= k * (hi - lo) / 65.0 + 1e-12);
          prev = y;
        }
      }
    }
  }
}

TEST_CASE("word values as base-k expansions") {
  CHECK(sigshift::word_to_point_exact(upw("", "0110", 2), 2) == Rational(2, 5));
  CHECK(sigshift::word_to_point_exact(upw("", "01", 2), 2) == Rational(1, 3));
  CHECK(sigshift::word_to_point_exact(upw("", "0", 2), 2) == 0);
  CHECK(sigshift::word_to_point_exact(upw("", "1", 2), 2) == 1);
  CHECK(sigshift::word_to_point_exact(upw("1", "0", 2), 2) == Rational(1, 2));
  CHECK(sigshift::word_to_point_exact(upw("", "012", 3), 3) == Rational(5, 26));

  CHECK(sigshift::word_to_point(upw("", "0110", 2), 2) == doctest::Approx(0.4));
  CHECK(sigshift::word_to_point(upw("", "01", 2), 2) == doctest::Approx(1.0 / 3));

  CHECK_THROWS_WITH_AS(sigshift::word_to_point_exact(upw("", "01", 2), 1),
                       "alphabet too small", std::invalid_argument);
  CHECK_THROWS_WITH_AS(sigshift::word_to_point_exact(upw("", "012", 3), 2),
                       "alphabet mismatch", std::invalid_argument);
}

TEST_CASE("float orbit patterns on worked examples") {
  Signature tent = Signature::parse("+-");
  auto got = sigshift::float_orbit_pattern(tent, 0.4, 2);
  REQUIRE(got.has_value());
  CHECK(got->str() == "12");

  CHECK_FALSE(sigshift::float_orbit_pattern(tent, 2.0 / 3, 2).has_value());
  CHECK_FALSE(sigshift::float_orbit_pattern(Signature::parse("++"), 0.0, 3).has_value());
  CHECK_THROWS_AS(sigshift::float_orbit_pattern(tent, 0.4, 0), std::invalid_argument);
}

TEST_CASE("interval dynamics reproduce symbolic patterns through the conjugacy") {
  // Feeding the map the point whose expansion is the conjugated word must
  // reproduce the symbolic pattern, whenever the exact orbit keeps enough
  // separation for the double-precision route to rank reliably.
  const Rational separation(1, 1000000);
  for (int k = 2; k <= 3; ++k) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const Signature& sigma : all_signatures(k)) {
        for (const Word& base : sigshift::enumerate_necklaces(k, n)) {
          PeriodicWord s(base);
          std::vector<Rational> exact;
          bool separated = true;
          for (std::size_t i = 0; i < n && separated; ++i) {
            UltimatelyPeriodicWord conjugated =
                psi(UltimatelyPeriodicWord::periodic(base.rotated_left(i)), sigma);
            Rational x = sigshift::word_to_point_exact(conjugated, k);
            for (const Rational& seen : exact) {
              Rational gap = x > seen ? x - seen : seen - x;
              if (gap < separation) separated = false;
            }
            exact.push_back(x);
          }
          if (!separated) continue;

          // The exact orbit follows the map itself.
          for (std::size_t i = 0; i + 1 < exact.size(); ++i) {
            CHECK(sigshift::eval_map_exact(sigma, exact[i]) == exact[i + 1]);
          }

          double x0 = exact.front().convert_to<double>();
          auto pattern = sigshift::float_orbit_pattern(sigma, x0, static_cast<int>(n));
          REQUIRE(pattern.has_value());
          CHECK(*pattern == orbit_pattern(s, sigma));
        }
      }
    }
  }
}
