#include "mswalk/hidden.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "mswalk/errors.hpp"

namespace mswalk {

namespace {

void check_dwell(const DwellDistribution& d)
{
    if (!(d.size > 0.0))
        throw std::domain_error("dwell distribution: size must be positive");
    if (!(d.prob > 0.0 && d.prob < 1.0))
        throw std::domain_error("dwell distribution: prob must lie in (0,1)");
}

} // namespace

double dwell_log_pmf(const DwellDistribution& d, int k)
{
    check_dwell(d);
    if (k < 1)
        throw std::domain_error("dwell_pmf: k must be >= 1");
    // NegBin(k-1; size n, prob q) through gamma functions for real n.
    const double n = d.size;
    const double j = k - 1.0;
    return std::lgamma(j + n) - std::lgamma(n) - std::lgamma(j + 1.0)
        + n * std::log(d.prob) + j * std::log1p(-d.prob);
}

double dwell_pmf(const DwellDistribution& d, int k)
{
    return std::exp(dwell_log_pmf(d, k));
}

double dwell_hazard(const DwellDistribution& d, int k)
{
    check_dwell(d);
    if (k < 1)
        throw std::domain_error("dwell_hazard: k must be >= 1");
    // Survivor mass S(k) = sum_{j >= k} Q(j); the tail decays at least
    // geometrically with ratio -> (1-q).
    const double qk = dwell_pmf(d, k);
    double survivor = 0.0;
    double term = qk;
    int j = k;
    while (term > 0.0) {
        survivor += term;
        ++j;
        // Q(j) / Q(j-1) = (1-q) (j-2+n) / (j-1)
        term *= (1.0 - d.prob) * (j - 2.0 + d.size) / (j - 1.0);
        if (term < survivor * 1e-18)
            break;
        if (j - k > 100000)
            break;
    }
    if (survivor <= 0.0) {
        std::cerr << "mswalk: dwell hazard at k=" << k
                  << " saturated to 1 (survivor mass underflowed)\n";
        return 1.0;
    }
    const double c = qk / survivor;
    return c > 1.0 ? 1.0 : c;
}

int sample_dwell(const DwellDistribution& d, Rng& rng)
{
    check_dwell(d);
    std::gamma_distribution<double> gamma(d.size, (1.0 - d.prob) / d.prob);
    const double rate = gamma(rng);
    if (rate <= 0.0)
        return 1;
    std::poisson_distribution<int> pois(rate);
    return 1 + pois(rng);
}

int ExpandedChain::index_of(int behavior, int dwell_index) const
{
    int base = 0;
    for (int b = 0; b < behavior; ++b)
        base += truncation[b];
    return base + dwell_index;
}

ExpandedChain build_expanded_chain(std::span<const DwellDistribution> dwells,
                                   std::span<const int> truncation)
{
    if (dwells.size() != 2 || truncation.size() != 2)
        throw std::invalid_argument("build_expanded_chain: exactly two behaviors supported");
    for (int m : truncation)
        if (m < 1)
            throw std::invalid_argument("build_expanded_chain: truncation must be >= 1");

    ExpandedChain chain;
    chain.truncation.assign(truncation.begin(), truncation.end());
    for (int b = 0; b < 2; ++b) {
        for (int k = 0; k < truncation[b]; ++k) {
            chain.states.emplace_back(b, k);
            chain.behavior_of.push_back(b);
        }
    }

    const int n = chain.size();
    chain.transition = Eigen::MatrixXd::Zero(n, n);
    for (int s = 0; s < n; ++s) {
        const auto [b, k] = chain.states[s];
        const double c = dwell_hazard(dwells[b], k + 1);
        const int leave = chain.index_of(1 - b, 0);
        const int stay = chain.index_of(b, std::min(truncation[b] - 1, k + 1));
        chain.transition(s, leave) = c;
        chain.transition(s, stay) += 1.0 - c;
    }
    return chain;
}

namespace {

// Reachability closure over the positive-mass adjacency.
std::vector<std::vector<bool>> reach_closure(const Eigen::MatrixXd& p)
{
    const int n = static_cast<int>(p.rows());
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            reach[i][j] = (i == j) || p(i, j) > 0.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!reach[i][k])
                continue;
            for (int j = 0; j < n; ++j)
                if (reach[k][j])
                    reach[i][j] = true;
        }
    return reach;
}

} // namespace

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition)
{
    const int n = static_cast<int>(transition.rows());
    if (transition.cols() != n || n < 1)
        throw std::invalid_argument("stationary_distribution: square matrix required");
    for (int i = 0; i < n; ++i) {
        if (std::abs(transition.row(i).sum() - 1.0) > 1e-9)
            throw std::invalid_argument("stationary_distribution: row " + std::to_string(i + 1)
                                        + " does not sum to 1");
    }

    const auto reach = reach_closure(transition);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (reach[i][j])
                continue;
            // i cannot reach j: the chain is reducible.  The set reachable
            // from i contains a closed (absorbing) class; shrink to a state
            // with a minimal reachable set and report that set.
            int core = i;
            int best = n + 1;
            for (int s = 0; s < n; ++s) {
                if (!reach[i][s])
                    continue;
                int cnt = 0;
                for (int t = 0; t < n; ++t)
                    cnt += reach[s][t] ? 1 : 0;
                if (cnt < best) {
                    best = cnt;
                    core = s;
                }
            }
            std::ostringstream msg;
            msg << "stationary_distribution: chain is reducible; absorbing class {";
            bool first = true;
            for (int t = 0; t < n; ++t) {
                if (reach[core][t]) {
                    msg << (first ? "" : ",") << t + 1;
                    first = false;
                }
            }
            msg << "}";
            throw NumericalError(msg.str());
        }
    }

    // Solve nu (P - I) = 0 with the normalization sum nu = 1 replacing the
    // last column equation.
    Eigen::MatrixXd a = transition.transpose() - Eigen::MatrixXd::Identity(n, n);
    a.row(n - 1).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    b(n - 1) = 1.0;
    Eigen::VectorXd nu = a.fullPivLu().solve(b);

    for (int i = 0; i < n; ++i)
        if (nu(i) < 0.0 && nu(i) > -1e-12)
            nu(i) = 0.0;
    nu /= nu.sum();

    const double residual = (transition.transpose() * nu - nu).cwiseAbs().maxCoeff();
    if (residual > 1e-10)
        throw NumericalError("stationary_distribution: residual "
                             + std::to_string(residual) + " exceeds 1e-10");
    return nu;
}

} // namespace mswalk
