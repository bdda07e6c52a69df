#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "pcone/errors.hpp"

namespace pcone {

using Vec = Eigen::VectorXd;

enum class ConeKind { circular, polyhedral };

struct MonteCarloArea {
  double value = 0.0;
  double std_error = 0.0;
};

// A pointed closed convex cone with nonempty interior, either circular
// (axis + half-angle) or polyhedral (conic hull of unit generators, with
// outward facet normals derived at construction). Immutable once built.
class Cone {
 public:
  static Cone circular(Vec axis, double half_angle);
  static Cone polyhedral(std::vector<Vec> generators);

  ConeKind kind() const { return kind_; }
  int dim() const { return dim_; }

  const Vec& axis() const;     // circular only
  double half_angle() const;   // circular only

  const std::vector<Vec>& generators() const;  // polyhedral only

  // Outward unit facet normals. Enumerable for polyhedral cones; circular
  // cones have a continuum of boundary normals and report none.
  bool has_facet_normals() const { return kind_ == ConeKind::polyhedral; }
  const std::vector<Vec>& facet_normals() const;

  // Signed interior slack: positive strictly inside, about zero on the
  // boundary, negative outside. Circular: <x,axis> - |x| cos(theta);
  // polyhedral: -max_j <x, nu_j>.
  double membership_slack(const Vec& x) const;
  bool contains(const Vec& x, bool strict = false, double tol = 1e-9) const;

  Cone dual() const;

  // sigma_{n-1}(Omega_C). Closed form for circular cones and 2-d sectors;
  // Monte Carlo for polyhedral cones in dimension 3 (std_error reported).
  double omega_area() const { return omega_area_; }
  double omega_area_std_error() const { return omega_area_std_error_; }

  // True when u is a valid outer normal direction sitting on the boundary
  // of Omega_{C dual} (member of the dual cone but not an interior one).
  bool is_boundary_normal(const Vec& u, double tol = 1e-9) const;

  // 2-d cones are the angular sector [angle_lo, angle_lo + angle_span].
  double angle_lo() const;
  double angle_span() const;

 private:
  Cone() = default;
  void finalize();

  ConeKind kind_ = ConeKind::circular;
  int dim_ = 0;
  Vec axis_;
  double half_angle_ = 0.0;
  std::vector<Vec> generators_;
  std::vector<Vec> facet_normals_;
  double angle_lo_ = 0.0;
  double angle_span_ = 0.0;
  double omega_area_ = 0.0;
  double omega_area_std_error_ = 0.0;
};

Cone make_circular_cone(const Vec& axis, double half_angle, int n);
Cone make_polyhedral_cone(const std::vector<Vec>& generators);
Cone dual_cone(const Cone& c);
bool contains(const Cone& c, const Vec& x, bool strict = false, double tol = 1e-9);
double omega_area(const Cone& c);

// Rejection-sampling estimate of sigma_{n-1}(Omega_C) on the unit sphere.
MonteCarloArea omega_area_monte_carlo(const Cone& c, std::size_t samples,
                                      std::uint64_t seed);

// Surface area of the unit sphere S^m embedded in R^{m+1}.
double unit_sphere_area(int m);

// Equality within tolerance (mutual membership of generating directions;
// axis/half-angle comparison for circular cones).
bool cones_equal(const Cone& a, const Cone& b, double tol = 1e-9);

}  // namespace pcone
