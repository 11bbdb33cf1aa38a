#pragma once

#include <variant>
#include <vector>

#include "toric/exact.hpp"
#include "toric/polygon.hpp"

namespace toric {

/// Height b, average width a and slope integer m of a Hirzebruch trapezoid.
/// Valid when a, b > 0, m >= 0 and a > (m/2) b.
struct HirzebruchParams {
  Rational a;
  Rational b;
  BigInt m;

  friend bool operator==(const HirzebruchParams&, const HirzebruchParams&) = default;
};

bool is_valid(const HirzebruchParams& params);
void validate(const HirzebruchParams& params);

/// Swaps a and b when m = 0 and a < b; the two rectangles are congruent.
HirzebruchParams canonical(const HirzebruchParams& params);

struct SphereProduct {
  Rational a;
  Rational b;
  friend bool operator==(const SphereProduct&, const SphereProduct&) = default;
};

struct BlowUp {
  Rational l;
  Rational e;
  friend bool operator==(const BlowUp&, const BlowUp&) = default;
};

/// Symplectomorphism type: S^2 x S^2 with areas (a, b), a >= b > 0, or the
/// one-point blow-up of CP^2 with line area l and exceptional area e, l > e > 0.
class ManifoldClass {
public:
  /// Orders the factors so that a >= b. Throws InvalidManifold unless a, b > 0.
  static ManifoldClass sphere_product(Rational a, Rational b);
  /// Throws InvalidManifold unless l > e > 0.
  static ManifoldClass blow_up(Rational l, Rational e);

  bool is_sphere_product() const noexcept { return std::holds_alternative<SphereProduct>(value_); }
  bool is_blow_up() const noexcept { return std::holds_alternative<BlowUp>(value_); }
  const SphereProduct& as_sphere_product() const { return std::get<SphereProduct>(value_); }
  const BlowUp& as_blow_up() const { return std::get<BlowUp>(value_); }
  const std::variant<SphereProduct, BlowUp>& value() const noexcept { return value_; }

  friend bool operator==(const ManifoldClass&, const ManifoldClass&) = default;

private:
  explicit ManifoldClass(std::variant<SphereProduct, BlowUp> value) : value_(std::move(value)) {}
  std::variant<SphereProduct, BlowUp> value_;
};

/// Symmetric nondegenerate integral form on H_2.
class IntersectionForm {
public:
  /// Throws InvalidForm unless q is symmetric with nonzero determinant.
  explicit IntersectionForm(IntMat2 q);

  /// [[0,1],[1,0]], the form of S^2 x S^2.
  static IntersectionForm hyperbolic();
  /// diag(1, -1), the form of the blow-up of CP^2 in the basis (L, E).
  static IntersectionForm blow_up();

  const IntMat2& matrix() const noexcept { return q_; }

private:
  IntMat2 q_;
};

/// Vertices (0,0), (a + mb/2, 0), (a - mb/2, b), (0, b).
Polygon standard_trapezoid(const HirzebruchParams& params);

struct QuadrilateralClass {
  HirzebruchParams params;
  UnimodularAffine witness; ///< apply_map(input, witness) == standard_trapezoid(params)
};

/// Puts a Delzant quadrilateral into standard trapezoid position.
///
/// For each cyclic relabeling the normal pair (u1, u2) is sent to the standard
/// basis; exactly the relabelings where the fourth normal lands on (0, -1) have
/// the third on (-1, k), and then m = |k| (a reflection fixes the sign of k).
/// Throws WrongEdgeCount or NotDelzant.
QuadrilateralClass classify_quadrilateral(const Polygon& polygon);

/// (a, b, m mod 2).
HirzebruchParams parity_reduce(const HirzebruchParams& params);

ManifoldClass manifold_of(const HirzebruchParams& params);

/// One parameter triple per conjugacy class of maximal tori, ordered by m.
std::vector<HirzebruchParams> enumerate_tori(const ManifoldClass& manifold);

/// ceil(a/b) for S^2 x S^2, ceil(e/(l-e)) for the blow-up.
BigInt count_tori(const ManifoldClass& manifold);

inline constexpr unsigned kDefaultAutomorphismBound = 3;

/// All M with entries in [-bound, bound], det M = +-1 and M^T Q M = Q, sorted
/// by row-major entries. For the hyperbolic and blow-up forms the answer does
/// not depend on the bound (checked in tests for bounds 1..5).
std::vector<IntMat2> form_automorphisms(const IntersectionForm& form,
                                        unsigned bound = kDefaultAutomorphismBound);

/// Whether some automorphism of the relevant intersection form carries the
/// cohomology class of the first symplectic form to that of the second.
bool same_symplectic_class(const ManifoldClass& first, const ManifoldClass& second);

} // namespace toric
