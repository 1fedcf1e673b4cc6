#ifndef MSWALK_MODEL_HPP
#define MSWALK_MODEL_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mswalk/hidden.hpp"

namespace mswalk {

/// One observed movement step: direction and distance of the displacement
/// plus the covariate angles/weights of the p targets seen from the step's
/// origin.
struct Step {
    double direction = 0.0; // y_t, radians
    double distance = 0.0;  // d_t, km
    std::vector<double> target_angles;  // x_{1t}..x_{pt}
    std::vector<double> target_weights; // z_{1t}..z_{pt}
};

/// Observed data: steps indexed t = 0..T.  Steps t = 1..T carry likelihood
/// contributions; step 0 provides the initial heading.
struct Trajectory {
    std::vector<Step> steps;

    int horizon() const { return static_cast<int>(steps.size()) - 1; } // T
    int target_count() const
    {
        return steps.empty() ? 0 : static_cast<int>(steps.front().target_angles.size());
    }
};

enum class HiddenKind { Markov, SemiMarkov };
enum class DistanceFamily { Exponential };

struct ModelSpec {
    int n_states = 1;  // K
    int n_targets = 0; // p
    HiddenKind hidden = HiddenKind::Markov;
    std::vector<int> dwell_truncation; // m per state, semi-Markov only
    bool fix_dwell_size = false;       // hold every n_h at 1 (Markov-equivalent dwell law)
    DistanceFamily distance_family = DistanceFamily::Exponential;
};

/// Model parameters.  `transition` is active under the Markov specification,
/// `dwell` under the semi-Markov one; the inactive block is ignored.
struct Params {
    Eigen::MatrixXd transition;          // K x K, rows on the simplex
    std::vector<DwellDistribution> dwell; // (n_h, q_h) per state
    Eigen::MatrixXd kappa;               // K x (p+1); column 0 = persistence
    Eigen::VectorXd lambda;              // K exponential means (km)
    Eigen::VectorXd pi0;                 // initial state distribution, length K
};

/// log f_k(y_t | ...) + log g_k(d_t), the state-k emission term at step t.
/// t = 0 is rejected (no predecessor direction).
double step_log_emission(const Params& params, const ModelSpec& spec,
                         const Trajectory& traj, int t, int state);

/// (T+1) x K matrix of log emissions over behaviors; row 0 is zero (step 0
/// carries no likelihood term).
Eigen::MatrixXd log_emission_matrix(const Params& params, const ModelSpec& spec,
                                    const Trajectory& traj);

/// Checks every type invariant; returns the full list of violations
/// (empty means valid).
std::vector<std::string> validate(const ModelSpec& spec, const Params& params,
                                  const Trajectory& traj);

/// The chain the filtering recursions actually run on: the K-state chain for
/// a Markov specification, the expanded (behavior, dwell-index) chain for a
/// semi-Markov one.  `initial` lifts pi0 (mass on dwell index 1).
struct WorkingChain {
    Eigen::MatrixXd transition;
    Eigen::VectorXd initial;
    std::vector<int> behavior_of; // working state -> behavior
    int n_behaviors = 0;

    bool is_expanded() const { return size() != n_behaviors; }
    int size() const { return static_cast<int>(behavior_of.size()); }
};

WorkingChain make_working_chain(const Params& params, const ModelSpec& spec);

/// Lifts a behavior-space log-emission matrix onto the working chain.
Eigen::MatrixXd lift_log_emission(const Eigen::MatrixXd& log_emission,
                                  const WorkingChain& chain);

} // namespace mswalk

#endif
