#pragma once

#include <array>

#include "slgraph/spectral.hpp"

namespace slgraph {

// Monic cubic p(x) = x^3 + a x^2 + b x + c.
struct CubicCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double eval(double x) const { return ((x + a) * x + b) * x + c; }
  double slope(double x) const { return (3.0 * x + 2.0 * a) * x + b; }
  // Positive iff the three roots are real and distinct.
  double discriminant() const;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Spectrum of the complete graph on `order` vertices with `loop_count`
// loops (placement is immaterial by symmetry).
Spectrum complete_spectrum(int order, int loop_count);

// Spectrum of the complete bipartite graph with the given part sizes and
// `loop_count` loops placed left part first: min(loop_count, left_size)
// loops on the left, the remainder on the right.
Spectrum complete_bipartite_spectrum(int left_size, int right_size,
                                     int loop_count);

// Cubic factor of the characteristic polynomial when all loops sit in the
// left part (0 < loop_count < left_size).
CubicCoefficients left_part_loops_cubic(int left_size, int right_size,
                                        int loop_count);
// Cubic factor when the loops fill the left part and spill into the right
// one (left_size < loop_count < left_size + right_size).
CubicCoefficients two_part_loops_cubic(int left_size, int right_size,
                                       int loop_count);

// Root brackets ((-R,0), (0,1), (1,R)) for the two-part cubic, R a coarse
// Cauchy-style radius. The sign conditions p(0) > 0 and p(1) < 0 are
// checked and a violation reported (it would mean a case-analysis bug).
std::array<Interval, 3> two_part_loops_brackets(int left_size, int right_size,
                                                int loop_count);
std::array<Interval, 3> left_part_loops_brackets(int left_size, int right_size,
                                                 int loop_count);

// Roots of a cubic with one sign-changing bracket per root: bisection to
// width 1e-6, then Newton polish to ~1e-12 absolute. Returned descending.
// Throws if p does not change sign across some bracket.
std::array<double, 3> solve_bracketed_cubic(const CubicCoefficients& cubic,
                                            const std::array<Interval, 3>& brackets);

}  // namespace slgraph
