#include "sigshift/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigshift/periodic_patterns.hpp"

namespace sigshift {

namespace {

std::vector<int> validated_cuts(const Permutation& tau, const std::vector<int>& D) {
  const int n = tau.size();
  if (D.empty()) throw std::invalid_argument("empty D");
  std::vector<int> sorted = D;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 1 || sorted.back() > n - 1) {
    throw std::invalid_argument("cut positions must lie in [1, n-1]");
  }
  const std::vector<int> des = descent_set(tau);
  for (int d : des) {
    if (!std::binary_search(sorted.begin(), sorted.end(), d)) {
      throw std::invalid_argument("descents not within D");
    }
  }
  return sorted;
}

}  // namespace

DeltaTrace delta_trace(const DeltaInput& input) {
  const int n = input.tau.size();
  if (n % 4 == 2) throw std::invalid_argument("n ≡ 2 (mod 4) unsupported");
  if (!is_cyclic(input.tau)) throw std::invalid_argument("not a cycle");
  const std::vector<int> cuts_d = validated_cuts(input.tau, input.D);
  const int k = static_cast<int>(cuts_d.size()) + 1;

  const Permutation pi = theta_inverse(input.tau).representative();
  std::vector<int> cuts{0};
  cuts.insert(cuts.end(), cuts_d.begin(), cuts_d.end());
  cuts.push_back(n);
  const Word induced = pi_monotone_word(pi, Segmentation(std::move(cuts)));
  if (!is_primitive(induced)) {
    // Descents of tau fall inside the cuts, so the induced word reproduces
    // pi from its own orbit and a proper power could not.
    throw std::logic_error("delta: induced word unexpectedly imprimitive");
  }
  PeriodicWord word(induced);
  const Signature sigma = Signature::all_minus(k);
  Permutation pi_prime = orbit_pattern(word, sigma);
  Permutation image = hat(pi_prime);
  return DeltaTrace{pi, std::move(word), std::move(pi_prime), std::move(image)};
}

Permutation delta(const DeltaInput& input) { return delta_trace(input).image; }

Permutation rho_to_pi(const Permutation& rho) {
  const int r = rho.size();
  if (r % 2 == 0) throw std::invalid_argument("even-length rho");
  std::vector<int> out;
  out.reserve(2 * static_cast<std::size_t>(r));
  for (int i = 1; i <= 2 * r; ++i) {
    const int rho_i = rho[(i - 1) % r + 1];
    out.push_back(i % 2 == 1 ? 2 * rho_i - 1 : 2 * rho_i);
  }
  return Permutation(std::move(out));
}

Permutation phi(const Permutation& pi, int alphabet) {
  const int n = pi.size();
  const int k = alphabet;
  if (n % 4 != 2) throw std::invalid_argument("length not 2 mod 4");
  if (k < 1) throw std::invalid_argument("alphabet too small");
  const Permutation tau = hat(pi);
  const std::vector<int> ascents = ascent_set(tau);
  if (static_cast<int>(ascents.size()) != k - 1) {
    throw std::invalid_argument("ascent count mismatch");
  }

  if (k == 1) {
    // Unary degenerate case: only n = 2 has an ascent-free hat image, and
    // the single-letter word 00 is never primitive, so pi cannot be
    // realized and its half word is the one-letter fixed point.
    return Permutation::identity(1);
  }

  const Signature sigma = Signature::all_minus(k);
  if (is_periodic_pattern(pi, sigma).realizable) {
    throw std::invalid_argument("pattern is realizable");
  }

  // With exactly k-1 ascents every segment boundary is forced, so the
  // segmentation below is the unique one.
  std::vector<int> cuts{0};
  cuts.insert(cuts.end(), ascents.begin(), ascents.end());
  cuts.push_back(n);
  const Word induced = pi_monotone_word(pi, Segmentation(std::move(cuts)));
  if (is_primitive(induced)) {
    throw std::logic_error("phi: induced word primitive despite non-realizability");
  }
  if (primitive_period(induced) != static_cast<std::size_t>(n) / 2) {
    throw std::logic_error("phi: induced word is not the square of a primitive word");
  }
  const Word half = induced.prefix(static_cast<std::size_t>(n) / 2);
  return orbit_pattern(PeriodicWord(half), sigma);
}

}  // namespace sigshift
