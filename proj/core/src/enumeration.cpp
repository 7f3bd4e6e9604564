#include "sigshift/enumeration.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace sigshift {

namespace {

std::mutex memo_mutex;
std::map<std::pair<int, int>, Count> c_memo;
std::map<std::pair<int, int>, Count> cprime_memo;

bool memo_lookup(const std::map<std::pair<int, int>, Count>& memo, int n, int k, Count& out) {
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = memo.find({n, k});
  if (it == memo.end()) return false;
  out = it->second;
  return true;
}

void memo_store(std::map<std::pair<int, int>, Count>& memo, int n, int k, const Count& value) {
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::make_pair(n, k), value);
}

}  // namespace

Count count_tent(int n) {
  if (n < 1) throw std::invalid_argument("count_tent: n must be positive");
  Count total = 0;
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    if (d % 2 == 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    total += Count(mu) * integer_power(2, static_cast<std::uint64_t>(n) / d);
  }
  Count denom(2 * n);
  Count out = total / denom;
  if (out * denom != total) throw std::logic_error("count_tent: sum not divisible by 2n");
  return out;
}

Count count_C(int n, int k) {
  if (n < 1 || k < 1) return 0;
  if (n == 1) return k == 1 ? Count(1) : Count(0);
  if (k < 2 || k > n) return 0;
  Count cached;
  if (memo_lookup(c_memo, n, k, cached)) return cached;
  Count value;
  if (k == 2) {
    value = primitive_word_count(2, static_cast<std::uint64_t>(n));
  } else {
    value = primitive_word_count(k, static_cast<std::uint64_t>(n));
    for (int i = 2; i < k; ++i) {
      value -= binomial(static_cast<std::uint64_t>(n + k - i), static_cast<std::uint64_t>(k - i)) *
               count_C(n, i);
    }
  }
  memo_store(c_memo, n, k, value);
  return value;
}

Count count_Cprime(int n, int k) {
  if (n < 1 || k < 1) return 0;
  if (n == 1) return k == 1 ? Count(1) : Count(0);
  if (k < 2 || k > n) return 0;
  if (n % 4 != 2) return count_C(n, k);
  Count cached;
  if (memo_lookup(cprime_memo, n, k, cached)) return cached;
  const int half = n / 2;
  Count value;
  if (k == 2) {
    value = primitive_word_count(2, static_cast<std::uint64_t>(n)) + count_Cprime(half, 2);
  } else {
    value = primitive_word_count(k, static_cast<std::uint64_t>(n));
    for (int i = 2; i < k; ++i) {
      value -= binomial(static_cast<std::uint64_t>(n + k - i), static_cast<std::uint64_t>(k - i)) *
                   count_Cprime(n, i) -
               binomial(static_cast<std::uint64_t>(half + k - i), static_cast<std::uint64_t>(k - i)) *
                   count_Cprime(half, i);
    }
    value += count_Cprime(half, k);
  }
  memo_store(cprime_memo, n, k, value);
  return value;
}

Count p_shift(int n, int k) {
  if (n < 2) throw std::invalid_argument("p_shift: n must be at least 2");
  if (k < 2) throw std::invalid_argument("p_shift: k must be at least 2");
  Count total = 0;
  for (int i = 2; i <= std::min(n, k); ++i) total += count_C(n, i);
  return total;
}

Count p_reverse(int n, int k) {
  if (n < 3) throw std::invalid_argument("p_reverse: n must be at least 3");
  if (k < 2) throw std::invalid_argument("p_reverse: k must be at least 2");
  Count total = 0;
  for (int i = 2; i <= std::min(n, k); ++i) total += count_Cprime(n, i);
  if (n % 4 == 2) total -= count_Cprime(n / 2, k);
  return total;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ') out.push_back(c);
  }
  return out;
}

}  // namespace

AvoidanceFamily parse_family(std::string_view text) {
  const std::string key = strip_spaces(text);
  if (key == "213,312") return AvoidanceFamily::unimodal_213_312;
  if (key == "132,231") return AvoidanceFamily::family_132_231;
  if (key == "321,2143,3142") return AvoidanceFamily::family_321_2143_3142;
  if (key == "123,2413,3412") return AvoidanceFamily::family_123_2413_3412;
  throw std::invalid_argument("unknown family");
}

std::vector<Permutation> family_patterns(AvoidanceFamily family) {
  switch (family) {
    case AvoidanceFamily::unimodal_213_312:
      return {Permutation::parse("213"), Permutation::parse("312")};
    case AvoidanceFamily::family_132_231:
      return {Permutation::parse("132"), Permutation::parse("231")};
    case AvoidanceFamily::family_321_2143_3142:
      return {Permutation::parse("321"), Permutation::parse("2143"), Permutation::parse("3142")};
    case AvoidanceFamily::family_123_2413_3412:
      return {Permutation::parse("123"), Permutation::parse("2413"), Permutation::parse("3412")};
  }
  throw std::invalid_argument("unknown family");
}

std::string family_name(AvoidanceFamily family) {
  switch (family) {
    case AvoidanceFamily::unimodal_213_312:
      return "213,312";
    case AvoidanceFamily::family_132_231:
      return "132,231";
    case AvoidanceFamily::family_321_2143_3142:
      return "321,2143,3142";
    case AvoidanceFamily::family_123_2413_3412:
      return "123,2413,3412";
  }
  throw std::invalid_argument("unknown family");
}

namespace {

Count count_avoiding_formula(int n, AvoidanceFamily family) {
  switch (family) {
    case AvoidanceFamily::unimodal_213_312:
    case AvoidanceFamily::family_132_231:
      return count_tent(n);
    case AvoidanceFamily::family_321_2143_3142:
      return primitive_word_count(2, static_cast<std::uint64_t>(n));
    case AvoidanceFamily::family_123_2413_3412: {
      // The closed form breaks down at n = 2, where the half-length term
      // overcounts; the true value is the single 2-cycle.
      if (n == 2) return 1;
      Count value = primitive_word_count(2, static_cast<std::uint64_t>(n));
      if (n % 4 == 2) value += primitive_word_count(2, static_cast<std::uint64_t>(n) / 2);
      return value;
    }
  }
  throw std::invalid_argument("unknown family");
}

Count count_avoiding_brute(int n, AvoidanceFamily family, int brute_limit) {
  if (n > brute_limit) throw std::invalid_argument("too large");
  const std::vector<Permutation> patterns = family_patterns(family);
  // Every n-cycle is the hat image of exactly one rotation-class
  // representative, so scanning the (n-1)! representatives visits each
  // cycle once.
  std::vector<int> rest(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i < n - 1; ++i) rest[static_cast<std::size_t>(i)] = i + 2;
  Count total = 0;
  do {
    std::vector<int> one_line;
    one_line.reserve(static_cast<std::size_t>(n));
    one_line.push_back(1);
    one_line.insert(one_line.end(), rest.begin(), rest.end());
    const Permutation tau = hat(Permutation(std::move(one_line)));
    bool avoids = true;
    for (const Permutation& rho : patterns) {
      if (contains_pattern(tau, rho)) {
        avoids = false;
        break;
      }
    }
    if (avoids) ++total;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return total;
}

}  // namespace

Count count_avoiding_cycles(int n, AvoidanceFamily family, CountMethod method, int brute_limit) {
  if (n < 2) throw std::invalid_argument("count_avoiding_cycles: n must be at least 2");
  switch (method) {
    case CountMethod::formula:
      return count_avoiding_formula(n, family);
    case CountMethod::brute:
      return count_avoiding_brute(n, family, brute_limit);
  }
  throw std::invalid_argument("unknown method");
}

Statistic parse_statistic(std::string_view text) {
  if (text == "C") return Statistic::C;
  if (text == "Cprime") return Statistic::Cprime;
  if (text == "p_shift") return Statistic::p_shift;
  if (text == "p_reverse") return Statistic::p_reverse;
  if (text == "tent") return Statistic::tent;
  if (text == "necklace") return Statistic::necklace;
  throw std::invalid_argument("unknown statistic");
}

std::string statistic_name(Statistic stat) {
  switch (stat) {
    case Statistic::C:
      return "C";
    case Statistic::Cprime:
      return "Cprime";
    case Statistic::p_shift:
      return "p_shift";
    case Statistic::p_reverse:
      return "p_reverse";
    case Statistic::tent:
      return "tent";
    case Statistic::necklace:
      return "necklace";
  }
  throw std::invalid_argument("unknown statistic");
}

CountTable CountTable::build(Statistic stat, int n_lo, int n_hi, int k_lo, int k_hi) {
  if (n_lo > n_hi || k_lo > k_hi) throw std::invalid_argument("empty table range");
  int min_n = 1;
  int min_k = 1;
  switch (stat) {
    case Statistic::p_shift:
      min_n = 2;
      min_k = 2;
      break;
    case Statistic::p_reverse:
      min_n = 3;
      min_k = 2;
      break;
    default:
      break;
  }
  if (n_lo < min_n || k_lo < min_k) {
    throw std::invalid_argument("statistic undefined on requested range");
  }

  CountTable table(stat, n_lo, n_hi, k_lo, k_hi);
  const std::size_t cols = static_cast<std::size_t>(k_hi - k_lo + 1);
  const std::size_t rows = static_cast<std::size_t>(n_hi - n_lo + 1);
  table.values_.resize(rows * cols);

  auto cell = [stat](int n, int k) -> Count {
    switch (stat) {
      case Statistic::C:
        return count_C(n, k);
      case Statistic::Cprime:
        return count_Cprime(n, k);
      case Statistic::p_shift:
        return p_shift(n, k);
      case Statistic::p_reverse:
        return p_reverse(n, k);
      case Statistic::tent:
        return count_tent(n);
      case Statistic::necklace:
        return primitive_word_count(k, static_cast<std::uint64_t>(n));
    }
    throw std::invalid_argument("unknown statistic");
  };

  std::vector<std::future<std::vector<Count>>> futures;
  futures.reserve(rows);
  for (int n = n_lo; n <= n_hi; ++n) {
    futures.push_back(std::async(std::launch::async, [&, n]() {
      std::vector<Count> row;
      row.reserve(cols);
      for (int k = k_lo; k <= k_hi; ++k) row.push_back(cell(n, k));
      return row;
    }));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Count> row = futures[r].get();
    std::copy(row.begin(), row.end(), table.values_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return table;
}

const Count& CountTable::value(int n, int k) const {
  if (n < n_lo_ || n > n_hi_ || k < k_lo_ || k > k_hi_) {
    throw std::out_of_range("table cell out of range");
  }
  const std::size_t cols = static_cast<std::size_t>(k_hi_ - k_lo_ + 1);
  return values_[static_cast<std::size_t>(n - n_lo_) * cols + static_cast<std::size_t>(k - k_lo_)];
}

std::string CountTable::to_csv() const {
  std::string out = "n,k,value,statistic\n";
  const std::string name = statistic_name(stat_);
  for (int n = n_lo_; n <= n_hi_; ++n) {
    for (int k = k_lo_; k <= k_hi_; ++k) {
      out += std::to_string(n);
      out.push_back(',');
      out += std::to_string(k);
      out.push_back(',');
      out += value(n, k).str();
      out.push_back(',');
      out += name;
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace sigshift
