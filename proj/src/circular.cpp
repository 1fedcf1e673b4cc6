#include "mswalk/circular.hpp"

#include <cmath>
#include <stdexcept>

namespace mswalk {

namespace {

constexpr double kSeriesCutoff = 15.0;

// Power series I_0(x) = sum_k (x^2/4)^k / (k!)^2.  Converges quickly for
// x below the cutoff; values stay well within double range there.
double i0_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

double i1_series(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return 0.5 * x * sum;
}

// Truncated asymptotic sum for I_nu(x) with the e^x / sqrt(2 pi x) prefactor
// removed: sum_k (-1)^k a_k(nu) / x^k, a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (8 j).
// Terms are added while they shrink; at x >= 15 the optimal truncation error
// is below 1e-12.
double asymptotic_sum(double x, int nu2x4)
{
    double term = 1.0;
    double sum = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double num = nu2x4 - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= -num / (8.0 * k * x);
        if (std::abs(term) >= std::abs(prev))
            break; // asymptotic series started diverging
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
        prev = term;
    }
    return sum;
}

} // namespace

double wrap_angle(double a)
{
    double w = std::fmod(a + kPi, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    return w - kPi;
}

double bessel_i0(double x)
{
    if (x < 0.0)
        throw std::domain_error("bessel_i0: negative argument");
    if (x < kSeriesCutoff)
        return i0_series(x);
    return std::exp(log_bessel_i0(x));
}

double log_bessel_i0(double x)
{
    if (x < 0.0)
        throw std::domain_error("log_bessel_i0: negative argument");
    if (x < kSeriesCutoff)
        return std::log(i0_series(x));
    return x + std::log(asymptotic_sum(x, 0)) - 0.5 * std::log(kTwoPi * x);
}

double bessel_ratio_a(double x)
{
    if (x < 0.0)
        throw std::domain_error("bessel_ratio_a: negative argument");
    if (x == 0.0)
        return 0.0;
    if (x < kSeriesCutoff)
        return i1_series(x) / i0_series(x);
    // Shared prefactors cancel in the ratio of asymptotic sums.
    return asymptotic_sum(x, 4) / asymptotic_sum(x, 0);
}

double bessel_ratio_a_prime(double x)
{
    if (x < 1e-8)
        return 0.5;
    const double a = bessel_ratio_a(x);
    return 1.0 - a * a - a / x;
}

double ConsensusVector::length() const
{
    return std::sqrt(vx * vx + vy * vy);
}

double ConsensusVector::direction() const
{
    return std::atan2(vy, vx);
}

ConsensusVector consensus_vector(double prev_direction,
                                 std::span<const double> kappa,
                                 std::span<const double> target_angles,
                                 std::span<const double> target_weights)
{
    const std::size_t p = target_angles.size();
    if (kappa.size() != p + 1 || target_weights.size() != p)
        throw std::invalid_argument("consensus_vector: length mismatch");
    ConsensusVector v;
    v.vx = kappa[0] * std::cos(prev_direction);
    v.vy = kappa[0] * std::sin(prev_direction);
    for (std::size_t i = 0; i < p; ++i) {
        const double w = kappa[i + 1] * target_weights[i];
        v.vx += w * std::cos(target_angles[i]);
        v.vy += w * std::sin(target_angles[i]);
    }
    return v;
}

double von_mises_log_density(double y, const ConsensusVector& v)
{
    // Canonical form: needs no mean direction, so the zero-length vector
    // (uniform circle density) is not a special case.
    return v.vx * std::cos(y) + v.vy * std::sin(y)
        - std::log(kTwoPi) - log_bessel_i0(v.length());
}

double sample_von_mises(double mu, double ell, Rng& rng)
{
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (ell < 1e-12)
        return wrap_angle(kTwoPi * unif(rng));

    // Best & Fisher (1979) wrapped-Cauchy envelope rejection.
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * ell * ell);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * ell);
    const double r = (1.0 + rho * rho) / (2.0 * rho);

    double f = 0.0;
    for (;;) {
        const double z = std::cos(kPi * unif(rng));
        f = (1.0 + r * z) / (r + z);
        const double c = ell * (r - f);
        const double u2 = unif(rng);
        if (c * (2.0 - c) - u2 > 0.0)
            break;
        if (std::log(c / u2) + 1.0 - c >= 0.0)
            break;
    }
    const double sign = unif(rng) > 0.5 ? 1.0 : -1.0;
    return wrap_angle(mu + sign * std::acos(f));
}

CircularSummary circular_summary(std::span<const double> angles)
{
    if (angles.empty())
        throw std::invalid_argument("circular_summary: empty sample");
    double sc = 0.0;
    double ss = 0.0;
    for (double a : angles) {
        sc += std::cos(a);
        ss += std::sin(a);
    }
    CircularSummary s;
    s.n = angles.size();
    s.mean_direction = std::atan2(ss, sc);
    s.resultant_length = std::sqrt(sc * sc + ss * ss) / static_cast<double>(s.n);
    return s;
}

} // namespace mswalk
