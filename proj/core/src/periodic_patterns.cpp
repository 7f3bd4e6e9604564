#include "sigshift/periodic_patterns.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace sigshift {

Word pi_monotone_word(const Permutation& pi, const Segmentation& cuts) {
  if (cuts.total() != pi.size()) {
    throw std::invalid_argument("malformed cuts: must end at the permutation length");
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) {
    letters.push_back(static_cast<Letter>(cuts.segment_of(pi[i])));
  }
  return Word(std::move(letters), cuts.segments());
}

RealizabilityReport is_periodic_pattern(const Permutation& pi, const Signature& sigma) {
  RealizabilityReport report{pi, sigma};
  const Permutation tau = hat(pi);
  for (const Segmentation& cuts : sigma_segmentations(tau, sigma)) {
    ++report.segmentations_tried;
    Word induced = pi_monotone_word(pi, cuts);
    if (is_primitive(induced)) report.witnesses.emplace_back(std::move(induced));
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.realizable = !report.witnesses.empty();
  return report;
}

std::vector<PeriodicWord> realizing_words(const Permutation& pi, const Signature& sigma) {
  return is_periodic_pattern(pi, sigma).witnesses;
}

namespace {

/// Deterministic parallel scan: workers take strided slices of the index
/// space and each returns an ordered set; the union is order-independent.
template <typename Producer>
std::set<CyclicClass> parallel_collect(std::size_t jobs, Producer produce) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs ? jobs : 1));
  if (workers <= 1 || jobs < 256) {
    std::set<CyclicClass> out;
    produce(0, 1, out);
    return out;
  }
  std::vector<std::future<std::set<CyclicClass>>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      std::set<CyclicClass> part;
      produce(w, workers, part);
      return part;
    }));
  }
  std::set<CyclicClass> out;
  for (auto& f : futures) out.merge(f.get());
  return out;
}

std::set<CyclicClass> enumerate_brute(const Signature& sigma, int length) {
  const std::vector<Word> necklaces = enumerate_necklaces(sigma.alphabet(), static_cast<std::size_t>(length));
  return parallel_collect(necklaces.size(), [&](unsigned offset, unsigned stride,
                                                std::set<CyclicClass>& out) {
    for (std::size_t i = offset; i < necklaces.size(); i += stride) {
      out.emplace(orbit_pattern(PeriodicWord(necklaces[i]), sigma));
    }
  });
}

std::set<CyclicClass> enumerate_characterization(const Signature& sigma, int length) {
  const int n = length;
  if (n == 1) {
    std::set<CyclicClass> out;
    Permutation one = Permutation::identity(1);
    if (is_periodic_pattern(one, sigma).realizable) out.emplace(one);
    return out;
  }
  // Rotation-class representatives are exactly the permutations starting
  // with 1; descents/ascents of the hat image bound the alphabet needed for
  // one-sided signatures, which prunes most candidates early.
  const bool plus_only = sigma.all_positive();
  const bool minus_only = sigma.all_negative();
  const std::size_t max_cut = static_cast<std::size_t>(sigma.alphabet()) - 1;
  std::size_t total = 1;
  for (int i = 2; i < n; ++i) total *= static_cast<std::size_t>(i);
  return parallel_collect(total, [&](unsigned offset, unsigned stride,
                                     std::set<CyclicClass>& out) {
    std::vector<int> rest(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n - 1; ++i) rest[static_cast<std::size_t>(i)] = i + 2;
    std::size_t index = 0;
    do {
      if (index++ % stride != offset) continue;
      std::vector<int> one_line;
      one_line.reserve(static_cast<std::size_t>(n));
      one_line.push_back(1);
      one_line.insert(one_line.end(), rest.begin(), rest.end());
      Permutation candidate(std::move(one_line));
      if (plus_only || minus_only) {
        const Permutation tau = hat(candidate);
        const std::size_t breaks =
            plus_only ? descent_set(tau).size() : ascent_set(tau).size();
        if (breaks > max_cut) continue;
      }
      if (is_periodic_pattern(candidate, sigma).realizable) out.emplace(candidate);
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
}

}  // namespace

std::set<CyclicClass> enumerate_periodic_classes(const Signature& sigma, int length,
                                                 EnumerationMethod method) {
  if (length < 1) throw std::invalid_argument("length must be positive");
  switch (method) {
    case EnumerationMethod::brute:
      return enumerate_brute(sigma, length);
    case EnumerationMethod::characterization:
      return enumerate_characterization(sigma, length);
  }
  throw std::invalid_argument("unknown enumeration method");
}

Count count_periodic_classes(const Signature& sigma, int length) {
  return Count(enumerate_periodic_classes(sigma, length, EnumerationMethod::characterization).size());
}

}  // namespace sigshift
