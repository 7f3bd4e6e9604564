#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sigshift/bijections.hpp"
#include "sigshift/periodic_patterns.hpp"

using sigshift::DeltaInput;
using sigshift::Permutation;
using sigshift::Signature;

namespace {

std::vector<std::vector<int>> subsets_of_size(int n_max, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= n_max; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

TEST_CASE("delta trace on the nine-element worked example") {
  DeltaInput input{Permutation::parse("245378916"), {3, 7}};
  auto trace = sigshift::delta_trace(input);
  CHECK(trace.pi.str() == "124357968");
  CHECK(trace.word.str() == "001011212");
  CHECK(trace.pi_prime.str() == "317265849");
  CHECK(trace.image.str() == "761985243");
  CHECK(sigshift::delta(input).str() == "761985243");
}

TEST_CASE("delta on three-element inputs") {
  CHECK(sigshift::delta(DeltaInput{Permutation::parse("312"), {1}}).str() == "231");
  CHECK(sigshift::delta(DeltaInput{Permutation::parse("231"), {2}}).str() == "312");
  CHECK(sigshift::delta(DeltaInput{Permutation::parse("231"), {1, 2}}).str() == "231");
}

TEST_CASE("delta rejects bad inputs") {
  CHECK_THROWS_WITH_AS(sigshift::delta(DeltaInput{Permutation::parse("321"), {1}}),
                       "not a cycle", std::invalid_argument);
  CHECK_THROWS_WITH_AS(sigshift::delta(DeltaInput{Permutation::parse("231"), {1}}),
                       "descents not within D", std::invalid_argument);
  CHECK_THROWS_AS(sigshift::delta(DeltaInput{Permutation::parse("231645"), {1, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sigshift::delta(DeltaInput{Permutation::parse("231"), {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sigshift::delta(DeltaInput{Permutation::parse("231"), {3}}),
                  std::invalid_argument);
}

TEST_CASE("delta restricts to a bijection for every cut set") {
  for (int n : {3, 4, 5}) {
    auto cycles = oracles::cycles_by_filter(n);
    for (int size = 1; size <= std::min(2, n - 1); ++size) {
      for (const auto& D : subsets_of_size(n - 1, size)) {
        std::vector<Permutation> domain;
        std::set<Permutation> codomain;
        for (const Permutation& tau : cycles) {
          auto des = sigshift::descent_set(tau);
          if (std::includes(D.begin(), D.end(), des.begin(), des.end())) {
            domain.push_back(tau);
          }
          auto asc = sigshift::ascent_set(tau);
          if (std::includes(D.begin(), D.end(), asc.begin(), asc.end())) {
            codomain.insert(tau);
          }
        }
        std::set<Permutation> image;
        for (const Permutation& tau : domain) {
          Permutation out = sigshift::delta(DeltaInput{tau, D});
          CHECK(codomain.count(out) == 1);
          image.insert(out);
        }
        CAPTURE(n);
        CHECK(image.size() == domain.size());
        CHECK(image == codomain);
      }
    }
  }
}

TEST_CASE("delta is independent of the preimage rotation used") {
  for (const Permutation& tau : oracles::cycles_by_filter(5)) {
    for (const auto& D : subsets_of_size(4, 2)) {
      auto des = sigshift::descent_set(tau);
      if (!std::includes(D.begin(), D.end(), des.begin(), des.end())) continue;
      Permutation expected = sigshift::delta(DeltaInput{tau, D});

      std::vector<int> cuts = {0};
      cuts.insert(cuts.end(), D.begin(), D.end());
      cuts.push_back(5);
      sigshift::Segmentation segmentation(cuts);
      for (const Permutation& rot : sigshift::theta_inverse(tau).members()) {
        sigshift::PeriodicWord word(pi_monotone_word(rot, segmentation));
        Permutation image = sigshift::hat(
            orbit_pattern(word, Signature::all_minus(static_cast<int>(D.size()) + 1)));
        CHECK(image == expected);
      }
    }
  }
}

TEST_CASE("rho_to_pi interleaves the doubled values") {
  CHECK(sigshift::rho_to_pi(Permutation::parse("231")).str() == "361452");
  CHECK(sigshift::rho_to_pi(Permutation::parse("14523")).str() == "1,8,9,4,5,2,7,10,3,6");
  CHECK(sigshift::rho_to_pi(Permutation::parse("1")).str() == "12");
  CHECK_THROWS_WITH_AS(sigshift::rho_to_pi(Permutation::parse("1234")),
                       "even-length rho", std::invalid_argument);
}

TEST_CASE("rho_to_pi outputs are never realizable over the matching reverse shift") {
  // The matching alphabet has one letter per ascent level of hat(rho); with
  // extra letters the doubled pattern can become realizable, so only the
  // exact alphabet is claimed.
  for (int r : {1, 3, 5}) {
    for (const Permutation& rho : oracles::all_permutations(r)) {
      int k = static_cast<int>(sigshift::ascent_set(sigshift::hat(rho)).size()) + 1;
      if (k < 2 || k > 3) continue;
      Permutation pi = sigshift::rho_to_pi(rho);
      auto report = sigshift::is_periodic_pattern(pi, Signature::all_minus(k));
      CAPTURE(rho.str());
      CAPTURE(k);
      CHECK_FALSE(report.realizable);
    }
  }
}

TEST_CASE("phi inverts rho_to_pi") {
  CHECK(sigshift::phi(Permutation::parse("361452"), 2).str() == "231");
  CHECK(sigshift::phi(Permutation::parse("452361"), 2).str() == "231");
  CHECK(sigshift::phi(Permutation::parse("1,8,9,4,5,2,7,10,3,6"), 2).str() == "14523");

  for (int r : {1, 3, 5}) {
    for (const Permutation& rho : oracles::all_permutations(r)) {
      int k = static_cast<int>(sigshift::ascent_set(sigshift::hat(rho)).size()) + 1;
      Permutation pi = sigshift::rho_to_pi(rho);
      CHECK(sigshift::phi(pi, k) == rho);
    }
  }
}

TEST_CASE("phi rejects inputs outside its domain") {
  CHECK_THROWS_WITH_AS(sigshift::phi(Permutation::parse("1234"), 2),
                       "length not 2 mod 4", std::invalid_argument);
  CHECK_THROWS_WITH_AS(sigshift::phi(Permutation::parse("361452"), 3),
                       "ascent count mismatch", std::invalid_argument);
  // A realizable class whose hat image has a single ascent exercises the
  // realizability rejection rather than the ascent-count one.
  Permutation realizable = [] {
    auto classes = sigshift::enumerate_periodic_classes(
        Signature::parse("--"), 6, sigshift::EnumerationMethod::characterization);
    for (const auto& cls : classes) {
      const Permutation& rep = cls.representative();
      if (sigshift::ascent_set(sigshift::hat(rep)).size() == 1) return rep;
    }
    throw std::logic_error("no single-ascent class found");
  }();
  CHECK_THROWS_WITH_AS(sigshift::phi(realizable, 2), "pattern is realizable",
                       std::invalid_argument);
}

TEST_CASE("phi is two to one onto odd patterns via half rotations") {
  const int n = 6;
  const int k = 2;
  Signature sigma = Signature::all_minus(k);
  std::map<Permutation, std::vector<Permutation>> fibers;
  for (const Permutation& tau : oracles::cycles_by_filter(n)) {
    if (static_cast<int>(sigshift::ascent_set(tau).size()) != k - 1) continue;
    for (const Permutation& pi : sigshift::theta_inverse(tau).members()) {
      if (sigshift::is_periodic_pattern(pi, sigma).realizable) continue;
      fibers[sigshift::phi(pi, k)].push_back(pi);
    }
  }
  CHECK(fibers.size() == 6);
  for (const auto& [rho, pis] : fibers) {
    CHECK(rho.size() == 3);
    REQUIRE(pis.size() == 2);
    CHECK(pis[0].rotated(1 + n / 2) == pis[1]);
  }
}
