#include "sigshift/permutation.hpp"

#include <charconv>

namespace sigshift {

namespace {

[[noreturn]] void bad_perm(const std::string& why) {
  throw std::invalid_argument("invalid permutation: " + why);
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = size();
  if (n == 0) bad_perm("empty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      bad_perm("entries must be 1..n without repeats");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) bad_perm("empty");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> entries;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '1' || c > '9') bad_perm("expected digits 1..9");
      entries.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view field = text.substr(pos, next - pos);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int value = 0;
      auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || p != field.data() + field.size()) {
        bad_perm("expected comma-separated entries");
      }
      entries.push_back(value);
      pos = next + 1;
      if (next == text.size()) break;
    }
  }
  return Permutation(std::move(entries));
}

int Permutation::position_of(int v) const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)[i] == v) return i;
  }
  bad_perm("value not present");
}

Permutation Permutation::rotated(int i) const {
  const int n = size();
  if (i < 1 || i > n) bad_perm("rotation start out of range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    out.push_back((*this)[(i - 1 + j) % n + 1]);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::complemented() const {
  const int n = size();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v : entries_) out.push_back(n + 1 - v);
  return Permutation(std::move(out));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : entries_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(entries_[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

Permutation hat(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int next = (i % n) + 1;
    out[static_cast<std::size_t>(pi[i] - 1)] = pi[next];
  }
  return Permutation(std::move(out));
}

bool is_cyclic(const Permutation& pi) {
  const int n = pi.size();
  int at = 1;
  for (int steps = 1; steps < n; ++steps) {
    at = pi[at];
    if (at == 1) return false;
  }
  return pi[at] == 1;
}

std::vector<int> descent_set(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi[i] > pi[i + 1]) out.push_back(i);
  }
  return out;
}

std::vector<int> ascent_set(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi[i] < pi[i + 1]) out.push_back(i);
  }
  return out;
}

namespace {

bool extend_match(const Permutation& tau, const Permutation& rho,
                  std::vector<int>& chosen, int next_pos) {
  const int m = rho.size();
  const int n = tau.size();
  const int j = static_cast<int>(chosen.size());
  if (j == m) return true;
  for (int pos = next_pos; pos <= n - (m - j - 1); ++pos) {
    bool ok = true;
    for (int p = 0; p < j; ++p) {
      bool pattern_less = rho[p + 1] < rho[j + 1];
      bool value_less = tau[chosen[static_cast<std::size_t>(p)]] < tau[pos];
      if (pattern_less != value_less) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(pos);
    if (extend_match(tau, rho, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& tau, const Permutation& rho) {
  if (rho.size() > tau.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(rho.size()));
  return extend_match(tau, rho, chosen, 1);
}

CyclicClass::CyclicClass(const Permutation& member)
    : representative_(member.rotated(member.position_of(1))) {}

std::vector<Permutation> CyclicClass::members() const {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i) out.push_back(representative_.rotated(i));
  return out;
}

CyclicClass theta_inverse(const Permutation& tau) {
  const int n = tau.size();
  std::vector<int> orbit;
  orbit.reserve(static_cast<std::size_t>(n));
  int at = 1;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int steps = 0; steps < n; ++steps) {
    if (seen[static_cast<std::size_t>(at)]) {
      throw std::invalid_argument("not a cycle");
    }
    seen[static_cast<std::size_t>(at)] = true;
    orbit.push_back(at);
    at = tau[at];
  }
  if (at != 1) throw std::invalid_argument("not a cycle");
  return CyclicClass(Permutation(std::move(orbit)));
}

Segmentation::Segmentation(std::vector<int> cuts) : cuts_(std::move(cuts)) {
  if (cuts_.size() < 2) throw std::invalid_argument("malformed cuts: need at least one segment");
  if (cuts_.front() != 0) throw std::invalid_argument("malformed cuts: must start at 0");
  for (std::size_t i = 1; i < cuts_.size(); ++i) {
    if (cuts_[i] < cuts_[i - 1]) {
      throw std::invalid_argument("malformed cuts: not weakly increasing");
    }
  }
}

int Segmentation::segment_of(int v) const {
  if (v < 1 || v > total()) throw std::invalid_argument("malformed cuts: value outside range");
  for (int t = 0; t < segments(); ++t) {
    if (cuts_[static_cast<std::size_t>(t)] < v && v <= cuts_[static_cast<std::size_t>(t) + 1]) {
      return t;
    }
  }
  throw std::logic_error("segment_of: unreachable");
}

std::string Segmentation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(cuts_[i]);
  }
  out.push_back(')');
  return out;
}

std::vector<Segmentation> sigma_segmentations(const Permutation& tau, const Signature& sigma) {
  const int n = tau.size();
  const int k = sigma.alphabet();

  // reach_inc[a] = largest b such that tau on (a, b] is strictly increasing;
  // likewise for decreasing runs.  Segment (a, b] is monotone iff b <= reach.
  std::vector<int> reach_inc(static_cast<std::size_t>(n) + 1, n);
  std::vector<int> reach_dec(static_cast<std::size_t>(n) + 1, n);
  for (int a = n - 2; a >= 0; --a) {
    bool rising = tau[a + 1] < tau[a + 2];
    reach_inc[static_cast<std::size_t>(a)] = rising ? reach_inc[static_cast<std::size_t>(a) + 1] : a + 1;
    reach_dec[static_cast<std::size_t>(a)] = rising ? a + 1 : reach_dec[static_cast<std::size_t>(a) + 1];
  }

  std::vector<Segmentation> out;
  std::vector<int> cuts{0};
  auto dfs = [&](auto&& self, int t) -> void {
    const int from = cuts.back();
    const int reach = sigma.is_negative(t) ? reach_dec[static_cast<std::size_t>(from)]
                                           : reach_inc[static_cast<std::size_t>(from)];
    if (t == k - 1) {
      if (reach >= n) {
        cuts.push_back(n);
        out.emplace_back(cuts);
        cuts.pop_back();
      }
      return;
    }
    for (int e = from; e <= reach; ++e) {
      cuts.push_back(e);
      self(self, t + 1);
      cuts.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace sigshift
