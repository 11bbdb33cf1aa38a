#include "toric/exact.hpp"

#include <utility>

namespace toric {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

} // namespace

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_digits(digits))
    throw Error(ErrorCode::InvalidRational, "not an integer: \"" + std::string(text) + "\"");
  return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));

  const std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text))
    throw Error(ErrorCode::InvalidRational, "not a rational: \"" + std::string(text) + "\"");
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den(std::string{den_text});
  if (den == 0)
    throw Error(ErrorCode::InvalidRational, "zero denominator: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const BigInt den = mp::denominator(value);
  if (den == 1) return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + den.str();
}

BigInt floor(const Rational& value) {
  const BigInt num = mp::numerator(value);
  const BigInt den = mp::denominator(value);
  BigInt quotient = num / den; // truncates toward zero
  if (num % den != 0 && num < 0) quotient -= 1;
  return quotient;
}

BigInt ceil(const Rational& value) { return -floor(-value); }

bool is_integer(const Rational& value) { return mp::denominator(value) == 1; }

IntVec2 primitive(const IntVec2& v) {
  if (v.x() == 0 && v.y() == 0) throw Error(ErrorCode::DegenerateDirection, "degenerate direction");
  const BigInt g = gcd(abs(v.x()), abs(v.y()));
  return IntVec2(v.x() / g, v.y() / g);
}

bool is_primitive(const IntVec2& v) {
  if (v.x() == 0 && v.y() == 0) return false;
  return gcd(abs(v.x()), abs(v.y())) == 1;
}

IntVec2 integer_direction(const RatVec2& v) {
  const BigInt dx = mp::denominator(v.x());
  const BigInt dy = mp::denominator(v.y());
  const BigInt scale = lcm(dx, dy);
  const IntVec2 scaled(mp::numerator(v.x()) * (scale / dx), mp::numerator(v.y()) * (scale / dy));
  return primitive(scaled);
}

IntMat2 inverse_unimodular(const IntMat2& m) {
  const BigInt det = m.determinant();
  if (det != 1 && det != -1)
    throw Error(ErrorCode::InvalidParams, "matrix is not unimodular (det = " + det.str() + ")");
  IntMat2 adjugate;
  adjugate << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return adjugate * det;
}

bool lex_less(const RatVec2& p, const RatVec2& q) {
  if (p.x() != q.x()) return p.x() < q.x();
  return p.y() < q.y();
}

UnimodularAffine::UnimodularAffine() : linear_(IntMat2::Identity()), translation_(RatVec2::Zero()) {}

UnimodularAffine::UnimodularAffine(IntMat2 linear, RatVec2 translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  const BigInt d = linear_.determinant();
  if (d != 1 && d != -1)
    throw Error(ErrorCode::InvalidParams, "linear part must have determinant +1 or -1, got " + d.str());
}

UnimodularAffine UnimodularAffine::shift(RatVec2 v) {
  return UnimodularAffine(IntMat2::Identity(), std::move(v));
}

RatVec2 UnimodularAffine::operator()(const RatVec2& p) const {
  const RatMat2 r = to_rational(linear_);
  return r * p + translation_;
}

RatVec2 apply(const UnimodularAffine& map, const RatVec2& p) { return map(p); }

UnimodularAffine compose(const UnimodularAffine& outer, const UnimodularAffine& inner) {
  IntMat2 linear = outer.linear() * inner.linear();
  RatVec2 translation = outer(inner.translation());
  return UnimodularAffine(std::move(linear), std::move(translation));
}

UnimodularAffine invert(const UnimodularAffine& map) {
  IntMat2 linear = inverse_unimodular(map.linear());
  const RatMat2 r = to_rational(linear);
  RatVec2 translation = -(r * map.translation());
  return UnimodularAffine(std::move(linear), std::move(translation));
}

} // namespace toric
