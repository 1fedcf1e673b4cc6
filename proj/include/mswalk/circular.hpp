#ifndef MSWALK_CIRCULAR_HPP
#define MSWALK_CIRCULAR_HPP

#include <cstddef>
#include <random>
#include <span>

namespace mswalk {

using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wraps an angle to [-pi, pi).
double wrap_angle(double a);

/// Modified Bessel function of the first kind, order zero.
/// Power series below x = 15, asymptotic expansion beyond.
/// Throws std::domain_error for x < 0.
double bessel_i0(double x);

/// log I_0(x), overflow-safe up to x ~ 1e4 and beyond.
double log_bessel_i0(double x);

/// Bessel ratio A(x) = I_1(x) / I_0(x), the mean resultant length of a
/// von Mises distribution with concentration x.  Strictly increasing on
/// [0, inf), A(0) = 0, A(x) -> 1.
double bessel_ratio_a(double x);

/// Derivative of A(x): A'(x) = 1 - A(x)^2 - A(x)/x, with A'(0) = 1/2.
double bessel_ratio_a_prime(double x);

/// Resultant vector of the consensus directional model.  Its direction is
/// the von Mises mean direction and its length the concentration.
struct ConsensusVector {
  double vx = 0.0;
  double vy = 0.0;

  double length() const;
  /// atan2(vy, vx) in [-pi, pi); only meaningful when length() > 0.
  double direction() const;
};

/// V = kappa_0 * (cos y_prev, sin y_prev) + sum_i kappa_i * z_i * (cos x_i, sin x_i).
/// kappa has length p+1, target_angles and target_weights have length p.
ConsensusVector consensus_vector(double prev_direction,
                                 std::span<const double> kappa,
                                 std::span<const double> target_angles,
                                 std::span<const double> target_weights);

/// log density of a von Mises angle with consensus vector v, evaluated in
/// canonical form  v . (cos y, sin y) - log(2 pi I_0(|v|)).  A zero-length
/// vector gives the uniform density on the circle.
double von_mises_log_density(double y, const ConsensusVector& v);

/// Draws from a von Mises(mu, ell) distribution by Best-Fisher rejection.
/// ell = 0 gives a uniform draw.  Returns an angle in [-pi, pi).
double sample_von_mises(double mu, double ell, Rng& rng);

struct CircularSummary {
  double mean_direction = 0.0;   // atan2(sum sin, sum cos)
  double resultant_length = 0.0; // |mean unit vector|, in [0, 1]
  std::size_t n = 0;
};

/// Resultant statistics of a nonempty sample of angles.
/// Throws std::invalid_argument on an empty input.
CircularSummary circular_summary(std::span<const double> angles);

} // namespace mswalk

#endif
