#pragma once

#include <Eigen/Core>

#include "choreo2c/errors.hpp"

namespace choreo2c {

using Vec3 = Eigen::Vector3d;

/// Physical constants of the two-fixed-center + n-body problem.
///
/// Two centers of mass M sit at the antipodal points c1, c2 and attract each
/// moving body through a 1/r^beta potential; the n moving bodies of mass m
/// attract each other through 1/r^alpha. The period is fixed at 2*pi.
///
/// m = 0 and M = 0 are admitted so the two limiting problems stay testable:
/// the free choreography (M = 0) and a single body around two centers (m = 0).
struct ProblemParams {
  double alpha = 1.0;  ///< exponent of the mutual potential 1/r^alpha
  double beta = 1.0;   ///< exponent of the center potential 1/r^beta
  double m = 1.0;      ///< mass of each moving body (>= 0)
  double M = 1.0;      ///< mass of each fixed center (>= 0)
  int n = 3;           ///< number of moving bodies (>= 2)
  Vec3 c1{1.0, 0.0, 0.0};   ///< first fixed center
  Vec3 c2{-1.0, 0.0, 0.0};  ///< second fixed center, must equal -c1
};

/// Returns `params` unchanged iff every invariant holds:
/// alpha > 0, beta > 0, m >= 0, M >= 0, n >= 2, c1 = -c2, all values finite.
/// Throws DomainError naming the violated invariant otherwise. Idempotent.
ProblemParams validate(const ProblemParams& params);

/// True when |c1| = 1 (and the centers are antipodal), which is the
/// normalization the closed-form radius predictions assume. The numerical
/// action machinery works for any antipodal pair.
bool has_unit_centers(const ProblemParams& params);

}  // namespace choreo2c
