#ifndef MSWALK_HIDDEN_HPP
#define MSWALK_HIDDEN_HPP

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mswalk/circular.hpp"

namespace mswalk {

/// Shifted negative binomial dwell-time law on {1, 2, ...}:
/// Q(k) = C(k-2+n, k-1) q^n (1-q)^{k-1}, generalized to real n > 0 through
/// gamma functions.  n = 1 reduces to a geometric law, i.e. a Markov chain
/// with leave probability q.
struct DwellDistribution {
    double size = 1.0; // n > 0
    double prob = 0.5; // q in (0, 1)
};

double dwell_log_pmf(const DwellDistribution& d, int k);
double dwell_pmf(const DwellDistribution& d, int k);

/// Hazard c(k) = Q(k) / sum_{j >= k} Q(j) in (0, 1].  Saturates to 1 (with a
/// one-line warning on stderr) when the survivor mass has numerically
/// vanished.
double dwell_hazard(const DwellDistribution& d, int k);

/// Draws a dwell time from the shifted negative binomial law
/// (1 + Poisson(Gamma(n, (1-q)/q)) mixture).
int sample_dwell(const DwellDistribution& d, Rng& rng);

/// Markov chain over (behavior, dwell-index) pairs approximating a two-state
/// semi-Markov process.  States are ordered (1,1)..(1,m1), (2,1)..(2,m2)
/// with 0-based behavior labels in `behavior_of`.
struct ExpandedChain {
    Eigen::MatrixXd transition;
    std::vector<std::pair<int, int>> states; // (behavior, dwell index), both 0-based
    std::vector<int> behavior_of;            // projector: expanded state -> behavior
    std::vector<int> truncation;             // m per behavior

    int size() const { return static_cast<int>(states.size()); }
    int index_of(int behavior, int dwell_index) const;
};

/// Builds the expanded chain.  From (i,k) mass c_i(k) goes to (3-i, 1) and
/// 1 - c_i(k) to (i, min(m_i, k+1)).  Two behaviors only.
ExpandedChain build_expanded_chain(std::span<const DwellDistribution> dwells,
                                   std::span<const int> truncation);

/// Stationary distribution nu of a row-stochastic irreducible matrix,
/// nu P = nu, sum nu = 1, residual below 1e-10.  Throws NumericalError for a
/// reducible chain, naming an absorbing class.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& transition);

} // namespace mswalk

#endif
