#include "mswalk/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mswalk {

namespace {

double log_exponential(double d, double mean)
{
    return -std::log(mean) - d / mean;
}

} // namespace

double step_log_emission(const Params& params, const ModelSpec& spec,
                         const Trajectory& traj, int t, int state)
{
    if (t < 1 || t > traj.horizon())
        throw std::out_of_range("step_log_emission: t must lie in 1..T");
    if (state < 0 || state >= spec.n_states)
        throw std::out_of_range("step_log_emission: state out of range");

    const Step& cur = traj.steps[static_cast<std::size_t>(t)];
    const Step& prev = traj.steps[static_cast<std::size_t>(t) - 1];
    const auto kappa_row = params.kappa.row(state);
    std::vector<double> kappa(kappa_row.begin(), kappa_row.end());

    const ConsensusVector v = consensus_vector(prev.direction, kappa,
                                               cur.target_angles, cur.target_weights);
    return von_mises_log_density(cur.direction, v)
        + log_exponential(cur.distance, params.lambda(state));
}

Eigen::MatrixXd log_emission_matrix(const Params& params, const ModelSpec& spec,
                                    const Trajectory& traj)
{
    const int T = traj.horizon();
    const int K = spec.n_states;
    Eigen::MatrixXd le = Eigen::MatrixXd::Zero(T + 1, K);
    for (int t = 1; t <= T; ++t)
        for (int k = 0; k < K; ++k)
            le(t, k) = step_log_emission(params, spec, traj, t, k);
    return le;
}

std::vector<std::string> validate(const ModelSpec& spec, const Params& params,
                                  const Trajectory& traj)
{
    std::vector<std::string> issues;
    auto add = [&issues](const std::string& s) { issues.push_back(s); };

    const int K = spec.n_states;
    const int p = spec.n_targets;
    if (K < 1)
        add("spec: K must be >= 1");
    if (p < 0)
        add("spec: p must be >= 0");
    if (spec.hidden == HiddenKind::SemiMarkov) {
        if (K != 2)
            add("spec: semi-Markov hidden process requires K = 2");
        if (static_cast<int>(spec.dwell_truncation.size()) != K)
            add("spec: dwell truncation must give one m per state");
        for (std::size_t i = 0; i < spec.dwell_truncation.size(); ++i)
            if (spec.dwell_truncation[i] < 1)
                add("spec: dwell truncation m_" + std::to_string(i + 1) + " must be >= 1");
    }

    if (spec.hidden == HiddenKind::Markov) {
        if (params.transition.rows() != K || params.transition.cols() != K) {
            add("params: transition matrix must be K x K");
        } else {
            for (int h = 0; h < K; ++h) {
                const double s = params.transition.row(h).sum();
                if (std::abs(s - 1.0) > 1e-12)
                    add("params: transition row " + std::to_string(h + 1)
                        + " sums to " + std::to_string(s) + ", expected 1");
                for (int k = 0; k < K; ++k)
                    if (params.transition(h, k) < 0.0)
                        add("params: transition(" + std::to_string(h + 1) + ","
                            + std::to_string(k + 1) + ") is negative");
            }
        }
    } else {
        if (static_cast<int>(params.dwell.size()) != K) {
            add("params: dwell parameters must give (n, q) per state");
        } else {
            for (int h = 0; h < K; ++h) {
                if (!(params.dwell[h].size > 0.0))
                    add("params: dwell size n_" + std::to_string(h + 1) + " must be positive");
                if (!(params.dwell[h].prob > 0.0 && params.dwell[h].prob < 1.0))
                    add("params: dwell prob q_" + std::to_string(h + 1) + " must lie in (0,1)");
            }
        }
    }

    if (params.kappa.rows() != K || params.kappa.cols() != p + 1)
        add("params: kappa must be K x (p+1)");
    if (params.lambda.size() != K) {
        add("params: lambda must have one entry per state");
    } else {
        for (int k = 0; k < K; ++k)
            if (!(params.lambda(k) > 0.0))
                add("params: lambda must be positive (state " + std::to_string(k + 1) + ")");
    }
    if (params.pi0.size() != K) {
        add("params: pi0 must have length K");
    } else {
        double s = 0.0;
        bool nonneg = true;
        for (int k = 0; k < K; ++k) {
            s += params.pi0(k);
            nonneg = nonneg && params.pi0(k) >= 0.0;
        }
        if (!nonneg || std::abs(s - 1.0) > 1e-12)
            add("params: pi0 must lie on the simplex");
    }

    if (traj.horizon() < 2)
        add("trajectory: needs T >= 2 (at least three records)");
    for (std::size_t t = 0; t < traj.steps.size(); ++t) {
        const Step& st = traj.steps[t];
        if (!(st.distance >= 0.0) || !std::isfinite(st.distance))
            add("trajectory: distance at t=" + std::to_string(t) + " must be >= 0");
        if (static_cast<int>(st.target_angles.size()) != p
            || static_cast<int>(st.target_weights.size()) != p)
            add("trajectory: covariate vectors at t=" + std::to_string(t)
                + " must have length p");
        if (!std::isfinite(st.direction))
            add("trajectory: direction at t=" + std::to_string(t) + " is not finite");
    }

    return issues;
}

WorkingChain make_working_chain(const Params& params, const ModelSpec& spec)
{
    WorkingChain chain;
    chain.n_behaviors = spec.n_states;
    if (spec.hidden == HiddenKind::Markov) {
        chain.transition = params.transition;
        chain.initial = params.pi0;
        chain.behavior_of.resize(static_cast<std::size_t>(spec.n_states));
        for (int k = 0; k < spec.n_states; ++k)
            chain.behavior_of[static_cast<std::size_t>(k)] = k;
        return chain;
    }

    ExpandedChain expanded = build_expanded_chain(params.dwell, spec.dwell_truncation);
    chain.transition = std::move(expanded.transition);
    chain.behavior_of = std::move(expanded.behavior_of);
    chain.initial = Eigen::VectorXd::Zero(chain.size());
    // pi0 lifted with all behavior mass on dwell index 1.
    for (int b = 0; b < spec.n_states; ++b)
        chain.initial(expanded.index_of(b, 0)) = params.pi0(b);
    return chain;
}

Eigen::MatrixXd lift_log_emission(const Eigen::MatrixXd& log_emission,
                                  const WorkingChain& chain)
{
    if (!chain.is_expanded())
        return log_emission;
    Eigen::MatrixXd lifted(log_emission.rows(), chain.size());
    for (int s = 0; s < chain.size(); ++s)
        lifted.col(s) = log_emission.col(chain.behavior_of[static_cast<std::size_t>(s)]);
    return lifted;
}

} // namespace mswalk
