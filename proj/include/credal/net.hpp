#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "credal/cone.hpp"
#include "credal/dag.hpp"
#include "credal/gamble.hpp"
#include "credal/lp.hpp"
#include "credal/random.hpp"

namespace credal {

// ------------------------------------------------------------------ input

class CycleError : public Error
{
public:
    explicit CycleError(std::vector<NodeId> cycle);
    const std::vector<NodeId>& cycle() const { return cycle_; }

private:
    std::vector<NodeId> cycle_;
};

// A parent configuration without a local model, or one given twice.
class IncompleteModelError : public Error
{
public:
    using Error::Error;
};

class IncoherentLocalModelError : public IncoherentModelError
{
public:
    IncoherentLocalModelError(NodeId node, Configuration parents, CoherenceReport report);

    const NodeId& node() const { return node_; }
    const Configuration& parents() const { return parents_; }
    const CoherenceReport& report() const { return report_; }

private:
    NodeId node_;
    Configuration parents_;
    CoherenceReport report_;
};

// Local models of one node: a cone on X_s for every parent configuration,
// indexed lexicographically over X_{P(s)}.
struct LocalModel
{
    NodeId node;
    Space parent_space;
    Space node_space;
    std::vector<AssessmentCone> cones;

    const AssessmentCone& given(const Configuration& parents) const;

    friend bool operator==(const LocalModel&, const LocalModel&) = default;
};

// A DAG with a finite variable per node and coherent local models.
// Immutable once constructed.
class CredalNet
{
public:
    // `local_cones[s]` lists one cone per parent configuration of s, in
    // lexicographic order. Throws CycleError, IncompleteModelError,
    // IncoherentLocalModelError or ScopeError.
    CredalNet(Dag dag, std::vector<VariableSpace> variables,
              std::map<NodeId, std::vector<AssessmentCone>> local_cones);

    const Dag& dag() const { return dag_; }
    const Space& space() const { return space_; }
    Space space_of(const Scope& scope) const { return space_.restrict(scope); }
    const LocalModel& local(const NodeId& s) const;
    const std::vector<LocalModel>& locals() const { return locals_; }

    friend bool operator==(const CredalNet&, const CredalNet&) = default;

private:
    Dag dag_;
    Space space_;
    std::vector<LocalModel> locals_;  // in sorted node order
};

// ------------------------------------------------------------------ joint

// Where a generator of the bundled assessment comes from: node s, parent
// configuration, configuration of N(s), and the local generator (the
// assessment gambles first, then the singleton indicators of X_s).
struct GeneratorOrigin
{
    NodeId node;
    std::size_t parent_index = 0;
    std::size_t context_index = 0;
    std::size_t local_index = 0;

    friend bool operator==(const GeneratorOrigin&, const GeneratorOrigin&) = default;
};

inline constexpr std::size_t kDefaultGeneratorCap = 100000;

// Exact count of generators build_joint would materialise.
std::size_t generator_count(const CredalNet& net);

// The materialised generator list of the bundled assessment. The joint
// model is its positive hull.
class JointModel
{
public:
    const CredalNet& net() const { return *net_; }
    std::shared_ptr<const CredalNet> shared_net() const { return net_; }
    const Space& space() const { return net_->space(); }

    std::size_t size() const { return rays_.size(); }
    const lp::Rays& rays() const { return rays_; }
    const std::vector<GeneratorOrigin>& origins() const { return origins_; }
    Gamble generator(std::size_t k) const { return Gamble(space(), rays_[k]); }

    // Copy whose generators built from local assessment gamble
    // `assessment_index` of (node, parent_index) are negated. Used to check
    // that verification notices a corrupted joint.
    JointModel with_sign_flipped(const NodeId& node, std::size_t parent_index,
                                 std::size_t assessment_index) const;

    friend JointModel build_joint(std::shared_ptr<const CredalNet> net, std::size_t cap);

private:
    std::shared_ptr<const CredalNet> net_;
    lp::Rays rays_;
    std::vector<GeneratorOrigin> origins_;
};

// Deterministic order: node, parent configuration, N(s) configuration,
// local generator. Throws CapExceededError before materialising.
JointModel build_joint(std::shared_ptr<const CredalNet> net, std::size_t cap = kDefaultGeneratorCap);

// ---------------------------------------------------------------- queries

// f in posi(generators); f may live on any sub-scope of G.
bool joint_member(const JointModel& jm, const Gamble& f);

// f in D_G conditioned on x_I: I_{x_I} f in D_G. f's scope must avoid I.
bool condition_member(const JointModel& jm, const Configuration& observed, const Gamble& f);

// f in marg_O(D_G | x_I) with O and I disjoint and f on X_O.
bool marginal_member(const JointModel& jm, const Scope& target, const Configuration& observed,
                     const Gamble& f);

// The joint as an assessment cone on X_G (for previsions and diagnostics).
AssessmentCone as_cone(const JointModel& jm);

// ----------------------------------------------------------- verification

struct IrrelevanceCase
{
    Gamble gamble;
    bool joint = false;  // I_{x_{P(s) u I}} f in D_G
    bool local = false;  // f in D_{s | x_{P(s)}}

    bool agrees() const { return joint == local; }
};

struct IrrelevanceReport
{
    NodeId node;
    Scope irrelevant;
    Configuration observed;  // on P(s) u I
    std::vector<IrrelevanceCase> cases;

    bool passed() const;
};

// For every f in `gambles`, compares joint-side and local-side membership.
// `observed` must fix exactly P(s) u I, with I inside N(s).
IrrelevanceReport check_irrelevance(const JointModel& jm, const NodeId& node, const Scope& irrelevant,
                                    const Configuration& observed, const std::vector<Gamble>& gambles);

struct VerifyOptions
{
    std::size_t budget = 10;  // random gambles per sweep point
    std::uint64_t seed = 0;
    std::size_t exhaustive_limit = 3;  // all subsets of N(s) up to this size
    std::size_t sampled_subsets = 8;
};

struct Violation
{
    std::string requirement;  // "G1", "G2", "G3", "G4"
    NodeId node;
    Configuration observed;
    Scope irrelevant;
    std::optional<Gamble> gamble;
    std::optional<bool> joint;
    std::optional<bool> local;
    std::string detail;
};

struct VerificationReport
{
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::size_t generators = 0;
    std::size_t local_checks = 0;         // G1: I empty
    std::size_t irrelevance_checks = 0;   // G2: I non-empty
    std::size_t coherence_checks = 0;     // G3
    std::size_t structural_checks = 0;    // G4 evidence
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
};

// Subsets of N(s) that the sweep visits for one node, in sweep order.
std::vector<Scope> irrelevant_subsets(const Scope& candidates, const VerifyOptions& options,
                                      Sampler& sampler);

VerificationReport verify_requirements(const JointModel& jm, const VerifyOptions& options = {});

}  // namespace credal
