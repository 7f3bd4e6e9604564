#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigshift/word.hpp"

namespace sigshift {

/// Exact unbounded integer used for all counts.
using Count = boost::multiprecision::cpp_int;

/// Divisors of n in increasing order.  n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Moebius function: 0 on non-squarefree input, otherwise (-1)^(#prime factors).
int moebius(std::uint64_t n);

/// Exact binomial coefficient; zero when r > n.
Count binomial(std::uint64_t n, std::uint64_t r);

Count integer_power(std::uint64_t base, std::uint64_t exponent);

/// Number of primitive words of length n over k letters, counted up to
/// rotation: (1/n) * sum over d | n of moebius(d) * k^(n/d).
Count primitive_word_count(int alphabet, std::uint64_t length);

/// All primitive necklaces of the given length in increasing lexicographic
/// order, each represented by its least rotation.  Uses Duval's algorithm;
/// the list size equals primitive_word_count(alphabet, length).
std::vector<Word> enumerate_necklaces(int alphabet, std::size_t length);

}  // namespace sigshift
