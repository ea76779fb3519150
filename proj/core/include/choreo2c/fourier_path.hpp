#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "choreo2c/errors.hpp"
#include "choreo2c/params.hpp"

namespace choreo2c {

/// Truncated Fourier representation of one 2*pi-periodic loop in 3-space:
///
///   x(t) = a_0 + sum_{k=1..K} a_k cos(kt) + b_k sin(kt)
///
/// a_0 is the loop mean. Real coefficient pairs (a_k, b_k) are the real form
/// of a complex expansion with the reality condition built in. Values are
/// immutable in spirit: every operation returns a new path, so instances are
/// safe to share across threads.
struct FourierPath {
  std::vector<Vec3> cos_coeffs;  ///< a_0 .. a_K (size K+1)
  std::vector<Vec3> sin_coeffs;  ///< b_1 .. b_K (size K)

  FourierPath() : FourierPath(1) {}
  explicit FourierPath(int order)
      : cos_coeffs(static_cast<std::size_t>(order) + 1, Vec3::Zero()),
        sin_coeffs(static_cast<std::size_t>(order), Vec3::Zero()) {
    if (order < 1) throw DomainError("Fourier order must be >= 1");
  }

  int order() const { return static_cast<int>(sin_coeffs.size()); }

  /// Mean term a_0.
  const Vec3& mean() const { return cos_coeffs[0]; }

  /// Number of scalar degrees of freedom, 3 * (2K + 1).
  int dof() const { return 3 * (2 * order() + 1); }
};

/// x(t) by direct series summation.
Vec3 evaluate(const FourierPath& path, double t);

/// The path t -> x(t + theta), as an exact phase rotation of each harmonic:
/// (a_k, b_k) -> (a_k cos(k theta) + b_k sin(k theta),
///                -a_k sin(k theta) + b_k cos(k theta)).
FourierPath shift(const FourierPath& path, double theta);

/// Term-wise time derivative: (a_k, b_k) -> (k b_k, -k a_k); the mean drops.
FourierPath derivative(const FourierPath& path);

/// Zeroes the mean term (orthogonal projection onto zero-mean loops).
FourierPath project_zero_mean(const FourierPath& path);

/// Zeroes every even-k coefficient, mean included; the fixed points are
/// exactly the antiperiodic loops x(t) = -x(t + pi).
FourierPath project_antiperiodic(const FourierPath& path);

/// Same loop embedded in a (usually larger) truncation order.
/// Truncating to a smaller order drops the tail harmonics.
FourierPath pad(const FourierPath& path, int order);

/// Coefficient-wise a - b (padded to the larger order).
FourierPath subtract(const FourierPath& a, const FourierPath& b);

/// sqrt(|a_0|^2 + sum_k |a_k|^2 + |b_k|^2): the flat coefficient norm.
double coeff_norm(const FourierPath& path);

/// True when every coefficient is finite.
bool is_finite(const FourierPath& path);

/// The circle x(t) = (0, R cos(t + phase), R sin(t + phase)): a pure
/// first-harmonic loop in the yz-plane. Satisfies both constraint
/// projections. Requires R > 0.
FourierPath circle_path(double radius, double phase = 0.0);

/// Flattened coefficient vector [a_0; a_1; ..; a_K; b_1; ..; b_K], 3 entries
/// per coefficient. This is the layout the action gradient uses.
Eigen::VectorXd to_coeffs(const FourierPath& path);
FourierPath from_coeffs(const Eigen::VectorXd& coeffs, int order);

/// Offsets into the flat layout (first scalar index of the 3-vector).
inline int cos_index(int k) { return 3 * k; }
inline int sin_index(int k, int order) { return 3 * (order + k); }

/// n bodies sharing the loop `base`, body i delayed by (i-1) * 2*pi/n:
/// q_i(t) = q_1(t + (i-1) 2 pi / n).
struct ChoreographySystem {
  FourierPath base;
  int n = 2;

  ChoreographySystem(FourierPath base_path, int bodies)
      : base(std::move(base_path)), n(bodies) {
    if (bodies < 2) throw DomainError("choreography needs n >= 2 bodies");
  }
};

/// The loop of body i (1-based), i.e. base shifted by (i-1) * 2*pi/n.
FourierPath body_path(const ChoreographySystem& sys, int body);

enum class SeparationFamily {
  kMutual,  ///< a pair of bodies came closest
  kCenter,  ///< a body came closest to one of the fixed centers
};

struct Separation {
  double value = 0.0;
  SeparationFamily family = SeparationFamily::kMutual;
};

/// Minimum over `samples` uniform time nodes of the body-body chords
/// |x(t) - x(t + j 2 pi / n)| (j = 1..n-1) and the center distances
/// |x(t) - c1|, |x(t) - c2|, with the family that attained the minimum.
///
/// Sampling is uniform rather than a global search: loops are band-limited
/// (order K), so >= 8K nodes keep the interpolation error negligible.
Separation min_separation(const ChoreographySystem& sys, int samples,
                          const Vec3& c1 = Vec3(1.0, 0.0, 0.0),
                          const Vec3& c2 = Vec3(-1.0, 0.0, 0.0));

/// Seeded random loop: harmonics up to `order` with 1/k amplitude decay,
/// scaled so coeff_norm == scale, zero-mean by construction. Used by the
/// verification campaigns and tests; deterministic in (seed, order, scale).
FourierPath random_zero_mean_path(std::uint64_t seed, int order, double scale);

}  // namespace choreo2c
