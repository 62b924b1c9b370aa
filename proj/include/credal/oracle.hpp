#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "credal/dag.hpp"
#include "credal/gamble.hpp"
#include "credal/lp.hpp"
#include "credal/net.hpp"

// Ground truth that does not go through the simplex: a precise Bayesian
// net evaluated by brute force, and Fourier-Motzkin elimination.
namespace credal::oracle {

// A Bayesian net with strictly positive rational conditional pmfs.
class PreciseNet
{
public:
    // `pmfs[s][x_P]` is p_s(. | x_P) over X_s, parent configurations in
    // lexicographic order. Every pmf must sum to one with positive entries.
    PreciseNet(Dag dag, std::vector<VariableSpace> variables,
               std::map<NodeId, std::vector<RationalVector>> pmfs);

    const Dag& dag() const { return dag_; }
    const Space& space() const { return space_; }

    const RationalVector& pmf(const NodeId& s, std::size_t parent_index) const;

    // p_G over every configuration of X_G, in lexicographic order.
    const RationalVector& joint() const { return joint_; }

    // E_s(h | x_P) for h on X_s.
    Rational local_expectation(const NodeId& s, const Configuration& parents, const Gamble& h) const;

    // p_G(x_S) for a configuration of any sub-scope S.
    Rational marginal_mass(const Configuration& config) const;

private:
    Dag dag_;
    Space space_;
    std::map<NodeId, std::vector<RationalVector>> pmfs_;
    RationalVector joint_;
};

// Bayesian net with the credal net's graph whose local pmfs are the
// witness pmfs reported by is_coherent for each local cone.
PreciseNet witness_net(const CredalNet& net);

// p_G(x_G) = prod_s p_s(x_s | x_P(s)).
Rational global_mass(const PreciseNet& pn, const Configuration& full);

// sum_x p_G(x) f(x), f on any sub-scope of G.
Rational expectation(const PreciseNet& pn, const Gamble& f);

// A local assessment gamble without strictly positive expectation under
// the supplied pmfs.
class WitnessMismatchError : public Error
{
public:
    using Error::Error;
};

struct AuditFailure
{
    Gamble gamble;
    Rational expectation;
};

struct PositivityAudit
{
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<AuditFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Draws `samples` random positive combinations of the joint's generators
// and checks each has strictly positive expectation under `pn`.
PositivityAudit positivity_audit(const PreciseNet& pn, const JointModel& jm, std::size_t samples,
                                 std::uint64_t seed = 0);

inline constexpr std::size_t kFmMaxDimension = 8;
inline constexpr std::size_t kFmMaxRays = 64;

// Decides whether target = sum lambda_k ray_k with lambda >= 0 by
// eliminating the lambdas (equalities by substitution, then
// Fourier-Motzkin with Chernikov's history rule).
bool fm_membership(std::span<const Rational> target, const lp::Rays& rays);

}  // namespace credal::oracle
