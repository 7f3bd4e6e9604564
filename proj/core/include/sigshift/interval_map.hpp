#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigshift/permutation.hpp"
#include "sigshift/shift.hpp"
#include "sigshift/signature.hpp"

namespace sigshift {

using Rational = boost::multiprecision::cpp_rational;

/// Piecewise linear self-map of [0,1] with k branches: on [t/k, (t+1)/k) the
/// map is kx - t for increasing letters and t + 1 - kx for decreasing ones.
/// x = 1 is evaluated as the left limit of the last branch.
double eval_map(const Signature& sigma, double x);
Rational eval_map_exact(const Signature& sigma, const Rational& x);

/// Value of the base-k expansion 0.s1 s2 s3 ..., exact via the geometric sum
/// of the periodic part.
Rational word_to_point_exact(const UltimatelyPeriodicWord& s, int alphabet);

/// Same, rounded to double once at the end.
double word_to_point(const UltimatelyPeriodicWord& s, int alphabet);

/// Pattern of the first n iterates of x; empty when two iterates collide
/// within an absolute tolerance of 1e-9.
std::optional<Permutation> float_orbit_pattern(const Signature& sigma, double x, int n);

}  // namespace sigshift
