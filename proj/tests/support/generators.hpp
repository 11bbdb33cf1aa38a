#pragma once

// Seeded random generators shared by the unit and acceptance suites.

#include <ostream>
#include <random>
#include <vector>

#include "toric/circle_actions.hpp"
#include "toric/hirzebruch.hpp"

namespace toric::testing {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// p/q with q in [1, max_den] and p/q in [lo, hi].
inline Rational random_rational(Rng& rng, long long lo, long long hi, long long max_den) {
  const long long q = uniform(rng, 1, max_den);
  return Rational(uniform(rng, lo * q, hi * q), q);
}

/// Integer matrix with entries in [-bound, bound] and determinant +-1.
inline IntMat2 random_unimodular_matrix(Rng& rng, long long bound = 10) {
  for (;;) {
    const long long a = uniform(rng, -bound, bound), b = uniform(rng, -bound, bound);
    const long long c = uniform(rng, -bound, bound), d = uniform(rng, -bound, bound);
    const long long det = a * d - b * c;
    if (det == 1 || det == -1) {
      IntMat2 m;
      m << a, b, c, d;
      return m;
    }
  }
}

inline UnimodularAffine random_affine(Rng& rng, long long bound = 10) {
  return UnimodularAffine(random_unimodular_matrix(rng, bound),
                          RatVec2(random_rational(rng, -bound, bound, 6), random_rational(rng, -bound, bound, 6)));
}

/// Valid canonical parameters with m <= max_m.
inline HirzebruchParams random_params(Rng& rng, long long max_m = 8) {
  const long long m = uniform(rng, 0, max_m);
  const Rational b = Rational(uniform(rng, 1, 24), uniform(rng, 1, 6));
  const Rational excess = Rational(uniform(rng, 1, 24), uniform(rng, 1, 6));
  return canonical(HirzebruchParams{Rational(m) * b / 2 + excess, b, BigInt(m)});
}

/// Every primitive (x, y) with |x|, |y| <= bound.
inline std::vector<CircleDirection> primitive_directions(long long bound) {
  std::vector<CircleDirection> out;
  for (long long x = -bound; x <= bound; ++x)
    for (long long y = -bound; y <= bound; ++y) {
      const IntVec2 v(x, y);
      if (is_primitive(v)) out.emplace_back(v);
    }
  return out;
}

inline RatVec2 point(long long x, long long y) { return RatVec2(Rational(x), Rational(y)); }
inline RatVec2 point(const Rational& x, const Rational& y) { return RatVec2(x, y); }

} // namespace toric::testing

namespace Eigen {

// Readable failure messages for exact vectors and matrices.
template <class S, int R, int C, int O, int MR, int MC>
void PrintTo(const Matrix<S, R, C, O, MR, MC>& m, std::ostream* os) {
  *os << "[";
  for (Index r = 0; r < m.rows(); ++r) {
    if (r) *os << "; ";
    for (Index c = 0; c < m.cols(); ++c) *os << (c ? " " : "") << m(r, c);
  }
  *os << "]";
}

} // namespace Eigen
