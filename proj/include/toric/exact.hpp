#pragma once

// Exact scalars and 2-dimensional lattice algebra.
//
// Every coordinate in the library is a Rational and every lattice vector an
// arbitrary-precision integer vector. Dense types are plain fixed-size Eigen
// matrices over these scalars, so the usual Eigen expressions (products,
// transposes, comparisons) work unchanged.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <type_traits>

#include "toric/error.hpp"

// Boost 1.74 probes every constructor argument for a byte container. Eigen 3.4
// expressions (and MatrixBase itself) expose `const_iterator = void`, which
// breaks that probe, so mark all Eigen types as non-containers.
namespace boost::multiprecision::detail {
template <class C>
  requires requires {
    typename C::StorageKind;
    typename C::StorageIndex;
  }
struct is_byte_container<C> : std::false_type {};
} // namespace boost::multiprecision::detail

namespace toric {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
/// Always reduced with positive denominator.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

template <typename Scalar> using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar> using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using IntVec2 = Vec2<BigInt>;
using RatVec2 = Vec2<Rational>;
using IntMat2 = Mat2<BigInt>;
using RatMat2 = Mat2<Rational>;

// ---------------------------------------------------------------- scalars

/// Parses "p" or "p/q" (optional leading '-', q > 0). Throws InvalidRational.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses a decimal integer with optional leading '-'. Throws InvalidRational.
BigInt parse_integer(std::string_view text);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);
bool is_integer(const Rational& value);

inline BigInt numerator_of(const Rational& value) { return mp::numerator(value); }
inline BigInt denominator_of(const Rational& value) { return mp::denominator(value); }

// ------------------------------------------------------------ lattice ops

template <typename Scalar>
Scalar det2(const Vec2<Scalar>& u, const Vec2<Scalar>& w) {
  return u.x() * w.y() - u.y() * w.x();
}

template <typename Scalar>
Scalar inner(const Vec2<Scalar>& u, const Vec2<Scalar>& w) {
  return u.x() * w.x() + u.y() * w.y();
}

template <typename Scalar>
Scalar cross(const Vec2<Scalar>& origin, const Vec2<Scalar>& p, const Vec2<Scalar>& q) {
  return det2<Scalar>(p - origin, q - origin);
}

/// Rotation by +90 degrees: (x, y) -> (-y, x).
template <typename Scalar>
Vec2<Scalar> rotate_left(const Vec2<Scalar>& v) {
  return Vec2<Scalar>(-v.y(), v.x());
}

/// v divided by gcd(|x|, |y|). Throws DegenerateDirection for the zero vector.
IntVec2 primitive(const IntVec2& v);

bool is_primitive(const IntVec2& v);

/// Primitive integer vector pointing along a nonzero rational vector.
IntVec2 integer_direction(const RatVec2& v);

inline RatVec2 to_rational(const IntVec2& v) { return v.cast<Rational>(); }
inline RatMat2 to_rational(const IntMat2& m) { return m.cast<Rational>(); }

/// Inverse of an integer matrix with determinant +1 or -1 (adjugate times det).
IntMat2 inverse_unimodular(const IntMat2& m);

/// Lexicographic comparison (x, then y); a strict weak order on RatVec2.
bool lex_less(const RatVec2& p, const RatVec2& q);

// ------------------------------------------------------- affine lattice maps

/// x -> R x + v with R in GL(2, Z).
class UnimodularAffine {
public:
  UnimodularAffine();
  /// Throws InvalidParams unless det(linear) is +1 or -1.
  UnimodularAffine(IntMat2 linear, RatVec2 translation);

  static UnimodularAffine identity() { return {}; }
  static UnimodularAffine shift(RatVec2 v);

  const IntMat2& linear() const noexcept { return linear_; }
  const RatVec2& translation() const noexcept { return translation_; }
  BigInt det() const { return linear_.determinant(); }

  RatVec2 operator()(const RatVec2& p) const;

  friend bool operator==(const UnimodularAffine& lhs, const UnimodularAffine& rhs) {
    return lhs.linear_ == rhs.linear_ && lhs.translation_ == rhs.translation_;
  }

private:
  IntMat2 linear_;
  RatVec2 translation_;
};

RatVec2 apply(const UnimodularAffine& map, const RatVec2& p);

/// p -> outer(inner(p)).
UnimodularAffine compose(const UnimodularAffine& outer, const UnimodularAffine& inner);

UnimodularAffine invert(const UnimodularAffine& map);

} // namespace toric
