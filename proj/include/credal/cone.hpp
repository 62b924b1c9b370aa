#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "credal/gamble.hpp"
#include "credal/lp.hpp"

namespace credal {

// A finitely generated set of desirable gambles on one space: the
// assessment A together with the implicit positivity rays (the singleton
// indicators). It stands for the natural extension posi(A u G_{>0}).
class AssessmentCone
{
public:
    explicit AssessmentCone(Space space, std::vector<Gamble> assessment = {});

    const Space& space() const { return space_; }
    const std::vector<Gamble>& assessment() const { return assessment_; }

    // Assessment tables followed by one unit vector per configuration.
    lp::Rays rays() const;

    friend bool operator==(const AssessmentCone&, const AssessmentCone&) = default;

private:
    Space space_;
    std::vector<Gamble> assessment_;
};

struct CoherenceReport
{
    bool coherent = false;

    // When coherent: strictly positive pmf under which every assessment
    // gamble has strictly positive expectation.
    RationalVector witness;
    // max over pmfs of min(p(x), E_p[f]); positive iff coherent.
    Rational margin;

    // When incoherent: nonnegative weights, not all zero, with
    //   sum_k assessment_weights[k] * f_k + sum_x indicator_weights[x] * I_x = 0.
    RationalVector assessment_weights;
    RationalVector indicator_weights;
};

CoherenceReport is_coherent(const AssessmentCone& cone);

// Membership of the natural extension. The zero gamble is never a member.
bool member(const AssessmentCone& cone, const Gamble& f);

// sup{ mu : f - mu in the natural extension }. Throws IncoherentModelError
// for incoherent cones.
Rational lower_prevision(const AssessmentCone& cone, const Gamble& f);
Rational upper_prevision(const AssessmentCone& cone, const Gamble& f);

struct SignDiagnostics
{
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    // First gamble f <= 0 found to be a member, if any.
    std::optional<Gamble> violation;

    bool ok() const { return !violation; }
};

// Checks that no nonpositive gamble is a member: every -I_x, then
// `samples` random nonzero f <= 0.
SignDiagnostics sign_diagnostics(const AssessmentCone& cone, std::size_t samples = 32,
                                 std::uint64_t seed = 0);

// Exact re-checks of the two coherence certificates.
bool verify_witness(const AssessmentCone& cone, const CoherenceReport& report);
bool verify_certificate(const AssessmentCone& cone, const CoherenceReport& report);

}  // namespace credal
