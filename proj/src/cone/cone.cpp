#include "credal/cone.hpp"

#include <iostream>
#include <stdexcept>

#include "credal/error.hpp"
#include "credal/random.hpp"

namespace credal {

AssessmentCone::AssessmentCone(Space space, std::vector<Gamble> assessment)
    : space_(std::move(space))
{
    assessment_.reserve(assessment.size());
    for (auto& g : assessment) {
        if (g.is_zero()) {
            throw ZeroGambleError("assessment contains the zero gamble");
        }
        assessment_.push_back(cylindrical_extend(g, space_));
    }
}

lp::Rays AssessmentCone::rays() const
{
    lp::Rays out;
    out.reserve(assessment_.size() + space_.size());
    for (const auto& g : assessment_) out.push_back(g.table());
    for (std::size_t x = 0; x < space_.size(); ++x) {
        RationalVector e(space_.size());
        e[x] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

CoherenceReport is_coherent(const AssessmentCone& cone)
{
    const std::size_t n = cone.space().size();
    const auto& assessment = cone.assessment();

    // variables: p(0..n-1), eps
    lp::LinearSystem sys(n + 1);
    sys.bounds.assign(n + 1, lp::Bound::nonnegative);
    sys.bounds[n] = lp::Bound::free;
    sys.objective[n] = 1;
    for (const auto& f : assessment) {
        RationalVector row(f.table());
        row.push_back(-1);
        sys.add(std::move(row), lp::Relation::greater_equal, 0);
    }
    for (std::size_t x = 0; x < n; ++x) {
        RationalVector row(n + 1);
        row[x] = 1;
        row[n] = -1;
        sys.add(std::move(row), lp::Relation::greater_equal, 0);
    }
    RationalVector total(n + 1, 1);
    total[n] = 0;
    sys.add(std::move(total), lp::Relation::equal, 1);

    lp::LpOutcome res = lp::solve(sys);
    if (res.status != lp::Status::optimal) {
        throw std::logic_error("coherence program must have a finite optimum");
    }

    CoherenceReport report;
    report.margin = res.objective;
    if (sgn(report.margin) > 0) {
        report.coherent = true;
        report.witness.assign(res.witness.begin(), res.witness.begin() + static_cast<std::ptrdiff_t>(n));
        return report;
    }

    auto combo = lp::vanishing_combination(cone.rays());
    if (!combo) {
        throw std::logic_error("no witness pmf and no vanishing combination");
    }
    const std::size_t k = assessment.size();
    report.assessment_weights.assign(combo->begin(), combo->begin() + static_cast<std::ptrdiff_t>(k));
    report.indicator_weights.assign(combo->begin() + static_cast<std::ptrdiff_t>(k), combo->end());
    return report;
}

bool member(const AssessmentCone& cone, const Gamble& f)
{
    Gamble g = cylindrical_extend(f, cone.space());
    if (g.is_zero()) {
        if (lp::contains_zero(cone.rays())) {
            std::clog << "warning: zero gamble queried against an incoherent cone\n";
        }
        return false;
    }
    return lp::conic_membership(g.table(), cone.rays()).member;
}

Rational lower_prevision(const AssessmentCone& cone, const Gamble& f)
{
    if (!is_coherent(cone).coherent) {
        throw IncoherentModelError("lower prevision of an incoherent model");
    }
    Gamble g = cylindrical_extend(f, cone.space());
    const std::size_t n = cone.space().size();
    const std::size_t k = cone.assessment().size();

    // f(x) = sum_j lambda_j g_j(x) + nu_x + mu, maximise mu.
    lp::LinearSystem sys(k + n + 1);
    sys.bounds.assign(k + n + 1, lp::Bound::nonnegative);
    sys.bounds[k + n] = lp::Bound::free;
    sys.objective[k + n] = 1;
    for (std::size_t x = 0; x < n; ++x) {
        RationalVector row(k + n + 1);
        for (std::size_t j = 0; j < k; ++j) row[j] = cone.assessment()[j][x];
        row[k + x] = 1;
        row[k + n] = 1;
        sys.add(std::move(row), lp::Relation::equal, g[x]);
    }
    lp::LpOutcome res = lp::solve(sys);
    if (res.status == lp::Status::unbounded) {
        throw IncoherentModelError("lower prevision is unbounded; the model is incoherent");
    }
    if (res.status != lp::Status::optimal) {
        throw std::logic_error("lower prevision program infeasible");
    }
    return res.objective;
}

Rational upper_prevision(const AssessmentCone& cone, const Gamble& f)
{
    return -lower_prevision(cone, -f);
}

SignDiagnostics sign_diagnostics(const AssessmentCone& cone, std::size_t samples, std::uint64_t seed)
{
    SignDiagnostics out;
    out.seed = seed;
    auto check = [&](const Gamble& f) {
        ++out.checked;
        if (member(cone, f)) out.violation = f;
        return out.ok();
    };
    for (std::size_t x = 0; x < cone.space().size(); ++x) {
        if (!check(-indicator(Configuration(cone.space(), x), cone.space()))) return out;
    }
    Sampler sampler(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        if (!check(sampler.nonpositive_gamble(cone.space()))) return out;
    }
    return out;
}

bool verify_witness(const AssessmentCone& cone, const CoherenceReport& report)
{
    const auto& p = report.witness;
    if (p.size() != cone.space().size()) return false;
    Rational total = 0;
    for (const auto& v : p) {
        if (sgn(v) <= 0) return false;
        total += v;
    }
    if (total != 1) return false;
    for (const auto& f : cone.assessment()) {
        if (sgn(lp::dot(p, f.table())) <= 0) return false;
    }
    return true;
}

bool verify_certificate(const AssessmentCone& cone, const CoherenceReport& report)
{
    const std::size_t n = cone.space().size();
    const auto& aw = report.assessment_weights;
    const auto& iw = report.indicator_weights;
    if (aw.size() != cone.assessment().size() || iw.size() != n) return false;
    bool any = false;
    RationalVector sum(n);
    for (std::size_t k = 0; k < aw.size(); ++k) {
        if (sgn(aw[k]) < 0) return false;
        any |= sgn(aw[k]) > 0;
        for (std::size_t x = 0; x < n; ++x) sum[x] += aw[k] * cone.assessment()[k][x];
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (sgn(iw[x]) < 0) return false;
        any |= sgn(iw[x]) > 0;
        sum[x] += iw[x];
    }
    if (!any) return false;
    for (const auto& v : sum) {
        if (sgn(v) != 0) return false;
    }
    return true;
}

}  // namespace credal
