#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracles {

using sigshift::Letter;
using sigshift::Permutation;
using sigshift::Signature;
using sigshift::Word;

std::vector<Word> all_words(int alphabet, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> cur(length, 0);
  while (true) {
    out.emplace_back(cur, alphabet);
    std::size_t i = length;
    while (i > 0 && cur[i - 1] == alphabet - 1) {
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

bool primitive_by_rotations(const Word& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    if (w.rotated_left(r) == w) return false;
  }
  return true;
}

std::vector<Word> necklaces_by_filter(int alphabet, std::size_t length) {
  std::vector<Word> out;
  for (const Word& w : all_words(alphabet, length)) {
    if (!primitive_by_rotations(w)) continue;
    bool least = true;
    for (std::size_t r = 1; r < w.size(); ++r) {
      if (w.rotated_left(r) < w) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(w);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(std::vector<int>(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> cycles_by_filter(int n) {
  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(n)) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int at = 1;
    int steps = 0;
    while (!seen[static_cast<std::size_t>(at)]) {
      seen[static_cast<std::size_t>(at)] = true;
      at = p[at];
      ++steps;
    }
    if (steps == n && at == 1) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<int>> segmentations_by_filter(const Permutation& tau,
                                                      const Signature& sigma) {
  const int n = tau.size();
  const int k = sigma.alphabet();
  std::vector<std::vector<int>> out;
  std::vector<int> cuts(static_cast<std::size_t>(k) + 1, 0);
  cuts.back() = n;

  auto monotone = [&](int a, int b, bool dec) {
    for (int i = a + 1; i < b; ++i) {
      if (dec ? tau[i] < tau[i + 1] : tau[i] > tau[i + 1]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int t) -> void {
    if (t == k) {
      for (int seg = 0; seg < k; ++seg) {
        if (!monotone(cuts[static_cast<std::size_t>(seg)],
                      cuts[static_cast<std::size_t>(seg) + 1], sigma.is_negative(seg))) {
          return;
        }
      }
      out.push_back(cuts);
      return;
    }
    for (int e = cuts[static_cast<std::size_t>(t) - 1]; e <= n; ++e) {
      cuts[static_cast<std::size_t>(t)] = e;
      self(self, t + 1);
    }
    cuts[static_cast<std::size_t>(t)] = n;
  };
  rec(rec, 1);
  return out;
}

int moebius_by_factoring(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++count;
    }
  }
  return count % 2 == 0 ? 1 : -1;
}

}  // namespace oracles
