#include "choreo2c/params.hpp"

#include <cmath>
#include <string>

namespace choreo2c {

namespace {

bool finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

}  // namespace

ProblemParams validate(const ProblemParams& params) {
  if (!std::isfinite(params.alpha) || params.alpha <= 0.0)
    throw DomainError("alpha must be positive");
  if (!std::isfinite(params.beta) || params.beta <= 0.0)
    throw DomainError("beta must be positive");
  if (!std::isfinite(params.m) || params.m < 0.0)
    throw DomainError("m must be nonnegative");
  if (!std::isfinite(params.M) || params.M < 0.0)
    throw DomainError("M must be nonnegative");
  if (params.n < 2) throw DomainError("n must be at least 2");
  if (!finite(params.c1) || !finite(params.c2))
    throw DomainError("centers must be finite");
  const double scale = std::max(1.0, params.c1.norm());
  if ((params.c1 + params.c2).norm() > 1e-12 * scale)
    throw DomainError("centers must be antipodal (c1 = -c2)");
  return params;
}

bool has_unit_centers(const ProblemParams& params) {
  return std::abs(params.c1.norm() - 1.0) <= 1e-12 &&
         (params.c1 + params.c2).norm() <= 1e-12;
}

}  // namespace choreo2c
