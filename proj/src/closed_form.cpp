#include "slgraph/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slgraph {

namespace {

void check_part_sizes(int left_size, int right_size, int loop_count) {
  if (left_size < 1 || right_size < 1) {
    throw std::invalid_argument("part sizes must be >= 1");
  }
  if (loop_count < 0 || loop_count > left_size + right_size) {
    throw std::invalid_argument("loop count must be in [0, order]");
  }
}

CubicCoefficients checked_cubic(double a, double b, double c) {
  CubicCoefficients cubic{a, b, c};
  if (!(cubic.discriminant() > 0.0)) {
    throw std::domain_error("cubic factor must have three distinct real roots");
  }
  return cubic;
}

double refine_root(const CubicCoefficients& p, double lo, double hi) {
  double flo = p.eval(lo);
  // Bisect to a narrow bracket first; the interval keeps the sign change.
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    double fmid = p.eval(mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0.0) == (fmid < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  // Newton polish from the bracket midpoint; simple roots double accuracy
  // per step, so a handful of iterations reaches machine precision.
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 60; ++iter) {
    double fx = p.eval(x);
    double dfx = p.slope(x);
    if (dfx == 0.0) break;
    double step = fx / dfx;
    double next = x - step;
    if (next < lo || next > hi) break;  // keep the guaranteed bracket
    x = next;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) return x;
  }
  // Newton left the bracket or stalled: finish by bisection.
  while (hi - lo > 1e-13 * std::max(1.0, std::abs(hi))) {
    double mid = 0.5 * (lo + hi);
    double fmid = p.eval(mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0.0) == (fmid < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double CubicCoefficients::discriminant() const {
  return 18.0 * a * b * c - 4.0 * a * a * a * c + a * a * b * b -
         4.0 * b * b * b - 27.0 * c * c;
}

Spectrum complete_spectrum(int order, int loop_count) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (loop_count < 0 || loop_count > order) {
    throw std::invalid_argument("loop count must be in [0, order], got " +
                                std::to_string(loop_count));
  }
  const double n = order;
  std::vector<std::pair<double, int>> pairs;
  if (loop_count == 0) {
    pairs = {{n - 1.0, 1}, {-1.0, order - 1}};
  } else if (loop_count == order) {
    pairs = {{n, 1}, {0.0, order - 1}};
  } else {
    double root = std::sqrt((n - 1.0) * (n - 1.0) + 4.0 * loop_count);
    pairs = {{0.5 * (n - 1.0 + root), 1},
             {0.0, loop_count - 1},
             {-1.0, order - loop_count - 1},
             {0.5 * (n - 1.0 - root), 1}};
  }
  return merge_spectrum_pairs(std::move(pairs));
}

CubicCoefficients left_part_loops_cubic(int left_size, int right_size,
                                        int loop_count) {
  check_part_sizes(left_size, right_size, loop_count);
  if (loop_count <= 0 || loop_count >= left_size) {
    throw std::invalid_argument("left-part cubic needs 0 < loops < left part size");
  }
  const double m = left_size, n = right_size, s = loop_count;
  return checked_cubic(-1.0, -m * n, n * (m - s));
}

CubicCoefficients two_part_loops_cubic(int left_size, int right_size,
                                       int loop_count) {
  check_part_sizes(left_size, right_size, loop_count);
  if (loop_count <= left_size || loop_count >= left_size + right_size) {
    throw std::invalid_argument(
        "two-part cubic needs left part size < loops < order");
  }
  const double m = left_size, n = right_size, s = loop_count;
  return checked_cubic(-2.0, 1.0 - m * n, m * (m + n - s));
}

namespace {

std::array<Interval, 3> cubic_brackets(const CubicCoefficients& p, double radius) {
  if (!(p.eval(0.0) > 0.0) || !(p.eval(1.0) < 0.0)) {
    throw std::domain_error(
        "cubic sign conditions p(0) > 0, p(1) < 0 violated; case analysis bug");
  }
  return {Interval{-radius, 0.0}, Interval{0.0, 1.0}, Interval{1.0, radius}};
}

}  // namespace

std::array<Interval, 3> two_part_loops_brackets(int left_size, int right_size,
                                                int loop_count) {
  auto p = two_part_loops_cubic(left_size, right_size, loop_count);
  const double mn = static_cast<double>(left_size) * right_size;
  const double radius =
      1.0 + std::max(2.0, mn + left_size * (left_size + right_size));
  return cubic_brackets(p, radius);
}

std::array<Interval, 3> left_part_loops_brackets(int left_size, int right_size,
                                                 int loop_count) {
  auto p = left_part_loops_cubic(left_size, right_size, loop_count);
  const double mn = static_cast<double>(left_size) * right_size;
  const double radius = 1.0 + std::max({2.0, mn, std::abs(p.c)});
  return cubic_brackets(p, radius);
}

std::array<double, 3> solve_bracketed_cubic(
    const CubicCoefficients& cubic, const std::array<Interval, 3>& brackets) {
  std::array<double, 3> roots{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [lo, hi] = brackets[i];
    if (!(lo < hi)) throw std::invalid_argument("empty bracket interval");
    double flo = cubic.eval(lo);
    double fhi = cubic.eval(hi);
    if (!(flo * fhi < 0.0)) {
      throw std::domain_error("bracket [" + std::to_string(lo) + ", " +
                              std::to_string(hi) +
                              "] violates the sign-change condition");
    }
    roots[i] = refine_root(cubic, lo, hi);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

Spectrum complete_bipartite_spectrum(int left_size, int right_size,
                                     int loop_count) {
  check_part_sizes(left_size, right_size, loop_count);
  const int m = left_size, n = right_size, s = loop_count;
  const double mn = static_cast<double>(m) * n;
  std::vector<std::pair<double, int>> pairs;
  if (s == 0) {
    pairs = {{std::sqrt(mn), 1}, {0.0, m + n - 2}, {-std::sqrt(mn), 1}};
  } else if (s < m) {
    auto roots = solve_bracketed_cubic(left_part_loops_cubic(m, n, s),
                                       left_part_loops_brackets(m, n, s));
    pairs = {{1.0, s - 1},  {0.0, m + n - s - 2}, {roots[0], 1},
             {roots[1], 1}, {roots[2], 1}};
  } else if (s == m) {
    double root = std::sqrt(1.0 + 4.0 * mn);
    pairs = {{0.5 * (1.0 + root), 1},
             {1.0, m - 1},
             {0.0, n - 1},
             {0.5 * (1.0 - root), 1}};
  } else if (s < m + n) {
    auto roots = solve_bracketed_cubic(two_part_loops_cubic(m, n, s),
                                       two_part_loops_brackets(m, n, s));
    pairs = {{1.0, s - 2},  {0.0, m + n - s - 1}, {roots[0], 1},
             {roots[1], 1}, {roots[2], 1}};
  } else {
    pairs = {{1.0 + std::sqrt(mn), 1}, {1.0, m + n - 2}, {1.0 - std::sqrt(mn), 1}};
  }
  return merge_spectrum_pairs(std::move(pairs));
}

}  // namespace slgraph
