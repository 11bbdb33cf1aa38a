#include "toric/hirzebruch.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace toric {

bool is_valid(const HirzebruchParams& p) {
  return p.a > 0 && p.b > 0 && p.m >= 0 && p.a > Rational(p.m) * p.b / 2;
}

void validate(const HirzebruchParams& p) {
  if (!is_valid(p))
    throw Error(ErrorCode::InvalidParams,
                "Hirzebruch parameters need a, b > 0, m >= 0 and a > (m/2) b; got a=" + to_string(p.a) +
                    " b=" + to_string(p.b) + " m=" + p.m.str());
}

HirzebruchParams canonical(const HirzebruchParams& p) {
  if (p.m == 0 && p.a < p.b) return {p.b, p.a, p.m};
  return p;
}

ManifoldClass ManifoldClass::sphere_product(Rational a, Rational b) {
  if (!(a > 0 && b > 0))
    throw Error(ErrorCode::InvalidManifold,
                "S2xS2 needs positive areas, got a=" + to_string(a) + " b=" + to_string(b));
  if (a < b) std::swap(a, b);
  return ManifoldClass(SphereProduct{std::move(a), std::move(b)});
}

ManifoldClass ManifoldClass::blow_up(Rational l, Rational e) {
  if (!(l > e && e > 0))
    throw Error(ErrorCode::InvalidManifold,
                "blow-up of CP2 needs l > e > 0, got l=" + to_string(l) + " e=" + to_string(e));
  return ManifoldClass(BlowUp{std::move(l), std::move(e)});
}

IntersectionForm::IntersectionForm(IntMat2 q) : q_(std::move(q)) {
  if (q_(0, 1) != q_(1, 0)) throw Error(ErrorCode::InvalidForm, "intersection form must be symmetric");
  if (q_.determinant() == 0) throw Error(ErrorCode::InvalidForm, "intersection form must be nondegenerate");
}

IntersectionForm IntersectionForm::hyperbolic() {
  IntMat2 q;
  q << 0, 1, 1, 0;
  return IntersectionForm(q);
}

IntersectionForm IntersectionForm::blow_up() {
  IntMat2 q;
  q << 1, 0, 0, -1;
  return IntersectionForm(q);
}

Polygon standard_trapezoid(const HirzebruchParams& p) {
  validate(p);
  const Rational half_shift = Rational(p.m) * p.b / 2;
  return make_polygon({RatVec2(Rational(0), Rational(0)), RatVec2(p.a + half_shift, Rational(0)),
                       RatVec2(p.a - half_shift, p.b), RatVec2(Rational(0), p.b)});
}

QuadrilateralClass classify_quadrilateral(const Polygon& polygon) {
  if (polygon.size() != 4)
    throw Error(ErrorCode::WrongEdgeCount,
                "expected 4 edges, got " + std::to_string(polygon.size()));
  const DelzantReport report = verify_delzant(polygon);
  if (!report.is_delzant) throw Error(ErrorCode::NotDelzant, "polygon is not Delzant");
  const std::vector<IntVec2>& u = report.normals;

  // Several relabelings can succeed when the trapezoid has symmetries; prefer
  // the identity, then orientation-preserving witnesses.
  std::optional<QuadrilateralClass> best;
  int best_rank = 3;
  for (std::size_t offset = 0; offset < 4; ++offset) {
    IntMat2 basis;
    basis.col(0) = u[offset];
    basis.col(1) = u[(offset + 1) % 4];
    IntMat2 normal_map = inverse_unimodular(basis);
    const IntVec2 third = normal_map * u[(offset + 2) % 4];
    const IntVec2 fourth = normal_map * u[(offset + 3) % 4];
    if (fourth != IntVec2(0, -1)) continue;

    // third == (-1, k); the standard trapezoid has k = -m <= 0.
    const BigInt k = third.y();
    if (k > 0) {
      IntMat2 flip;
      flip << 1, 0, 0, -1;
      normal_map = flip * normal_map;
    }
    // Normals transform by the inverse transpose of the vertex map.
    const IntMat2 linear = inverse_unimodular(normal_map).transpose();
    UnimodularAffine witness(linear, RatVec2::Zero());
    const Polygon turned = apply_map(polygon, witness);
    // Lexicographic minimum is the corner between the vertical and bottom edges.
    witness = compose(UnimodularAffine::shift(-turned.vertex(0)), witness);
    const Polygon placed = apply_map(polygon, witness);

    const Rational height = placed.vertex(2).y();
    const Rational average_width = (placed.vertex(1).x() + placed.vertex(2).x()) / 2;
    HirzebruchParams params{average_width, height, abs(k)};

    if (params.m == 0 && params.a < params.b) {
      // Quarter turn (x, y) -> (b - y, x) swaps the rectangle's sides.
      IntMat2 quarter;
      quarter << 0, -1, 1, 0;
      witness = compose(UnimodularAffine(quarter, RatVec2(params.b, Rational(0))), witness);
      params = canonical(params);
    }

    if (apply_map(polygon, witness) != standard_trapezoid(params))
      throw std::logic_error("classify_quadrilateral: witness does not reach standard position");

    const int rank = witness.linear() == IntMat2::Identity() ? 0 : (witness.det() == 1 ? 1 : 2);
    if (rank < best_rank) {
      best_rank = rank;
      best = QuadrilateralClass{std::move(params), std::move(witness)};
    }
  }
  // det(u3, u4) = 1 forces kl = 0, so some relabeling always succeeds.
  if (!best) throw std::logic_error("classify_quadrilateral: no relabeling reached standard form");
  return *std::move(best);
}

HirzebruchParams parity_reduce(const HirzebruchParams& p) {
  validate(p);
  return {p.a, p.b, p.m % 2};
}

ManifoldClass manifold_of(const HirzebruchParams& p) {
  validate(p);
  if (p.m % 2 == 0) return ManifoldClass::sphere_product(p.a, p.b);
  return ManifoldClass::blow_up(p.a + p.b / 2, p.a - p.b / 2);
}

std::vector<HirzebruchParams> enumerate_tori(const ManifoldClass& manifold) {
  std::vector<HirzebruchParams> result;
  if (manifold.is_sphere_product()) {
    const auto& [a, b] = manifold.as_sphere_product();
    const Rational ratio = a / b;
    for (BigInt k = 0; Rational(k) < ratio; ++k) result.push_back({a, b, 2 * k});
  } else {
    const auto& [l, e] = manifold.as_blow_up();
    const Rational a = (l + e) / 2;
    const Rational b = l - e;
    const Rational ratio = e / (l - e);
    for (BigInt k = 0; Rational(k) < ratio; ++k) result.push_back({a, b, 2 * k + 1});
  }
  return result;
}

BigInt count_tori(const ManifoldClass& manifold) {
  if (manifold.is_sphere_product()) {
    const auto& [a, b] = manifold.as_sphere_product();
    return ceil(a / b);
  }
  const auto& [l, e] = manifold.as_blow_up();
  return ceil(e / (l - e));
}

namespace {

bool row_major_less(const IntMat2& lhs, const IntMat2& rhs) {
  for (Eigen::Index r = 0; r < 2; ++r)
    for (Eigen::Index c = 0; c < 2; ++c)
      if (lhs(r, c) != rhs(r, c)) return lhs(r, c) < rhs(r, c);
  return false;
}

} // namespace

std::vector<IntMat2> form_automorphisms(const IntersectionForm& form, unsigned bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidParams, "bound must be positive");
  const IntMat2& q = form.matrix();
  const long long hi = bound;
  std::vector<IntMat2> result;
  IntMat2 m;
  for (long long a = -hi; a <= hi; ++a)
    for (long long b = -hi; b <= hi; ++b)
      for (long long c = -hi; c <= hi; ++c)
        for (long long d = -hi; d <= hi; ++d) {
          const long long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          m << a, b, c, d;
          if (IntMat2(m.transpose() * q * m) == q) result.push_back(m);
        }
  std::sort(result.begin(), result.end(), row_major_less);
  return result;
}

bool same_symplectic_class(const ManifoldClass& first, const ManifoldClass& second) {
  if (first.is_sphere_product() != second.is_sphere_product()) return false;

  static const std::vector<IntMat2> sphere_autos = form_automorphisms(IntersectionForm::hyperbolic());
  static const std::vector<IntMat2> blow_up_autos = form_automorphisms(IntersectionForm::blow_up());

  RatVec2 source, target;
  if (first.is_sphere_product()) {
    source = RatVec2(first.as_sphere_product().a, first.as_sphere_product().b);
    target = RatVec2(second.as_sphere_product().a, second.as_sphere_product().b);
  } else {
    source = RatVec2(first.as_blow_up().l, first.as_blow_up().e);
    target = RatVec2(second.as_blow_up().l, second.as_blow_up().e);
  }
  const auto& autos = first.is_sphere_product() ? sphere_autos : blow_up_autos;
  // A diffeomorphism acting on H_2 by M pulls the class back by M^T.
  return std::any_of(autos.begin(), autos.end(), [&](const IntMat2& m) {
    const RatMat2 pull = to_rational(IntMat2(m.transpose()));
    return RatVec2(pull * source) == target;
  });
}

} // namespace toric
