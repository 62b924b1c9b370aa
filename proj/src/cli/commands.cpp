#include "credal/commands.hpp"

#include <functional>
#include <ostream>

namespace credal::cli {

namespace {

using io::Json;

int guarded(std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

void emit(std::ostream& out, const Json& report)
{
    out << report.dump(2) << "\n";
}

const Json* optional_field(const Json& obj, const char* key)
{
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::string kind_of(const Json& q)
{
    auto it = q.find("kind");
    if (it == q.end() || !it->is_string()) throw ParseError("query without a string 'kind'");
    return it->get<std::string>();
}

std::size_t count_field(const Json& q, const char* key, std::size_t fallback)
{
    const Json* v = optional_field(q, key);
    if (!v) return fallback;
    if (!v->is_number_unsigned()) throw ParseError(std::string("'") + key + "' must be a non-negative integer");
    return v->get<std::size_t>();
}

// The local cone selected by {"node": s, "given": x_P}.
const AssessmentCone& local_cone(const CredalNet& net, const Json& q)
{
    NodeId s = q.at("node").get<std::string>();
    const LocalModel& local = net.local(s);
    Configuration given = q.contains("given") ? io::parse_configuration(q.at("given"), net.space())
                                              : Configuration(local.parent_space, 0);
    if (!(given.scope() == local.parent_space.scope())) {
        throw ScopeError("local model of '" + s + "' is selected by a configuration of "
                         + to_string(local.parent_space.scope()));
    }
    return local.given(given);
}

Json run_irrelevance(const JointModel& jm, const Json& q, Sampler& sampler)
{
    const CredalNet& net = jm.net();
    NodeId s = q.at("node").get<std::string>();
    const LocalModel& local = net.local(s);
    Scope irrelevant = q.contains("irrelevant") ? io::parse_scope(q.at("irrelevant")) : Scope{};
    const Scope fixed = unite(net.dag().parents(s), irrelevant);

    std::vector<Configuration> observations;
    if (q.contains("given")) {
        observations.push_back(io::parse_configuration(q.at("given"), net.space()));
    } else {
        observations = configurations(net.space_of(fixed));
    }

    std::vector<Gamble> explicit_gambles;
    if (const Json* gs = optional_field(q, "gambles")) {
        for (const auto& g : *gs) {
            RationalVector values;
            for (const auto& v : g) values.push_back(io::parse_rational_json(v));
            explicit_gambles.emplace_back(local.node_space, std::move(values));
        }
    }
    const std::size_t samples = count_field(q, "samples", 10);

    Json violations = Json::array();
    std::size_t cases = 0;
    for (const auto& observed : observations) {
        std::vector<Gamble> probes = explicit_gambles;
        for (const auto& g : local.given(observed.restrict(net.dag().parents(s))).assessment()) {
            probes.push_back(g);
            probes.push_back(-g);
        }
        for (std::size_t i = 0; i < samples; ++i) probes.push_back(sampler.nonzero_gamble(local.node_space));

        auto report = check_irrelevance(jm, s, irrelevant, observed, probes);
        cases += report.cases.size();
        for (const auto& c : report.cases) {
            if (c.agrees()) continue;
            violations.push_back(Json{{"given", io::to_json(observed)},
                                      {"gamble", io::to_json(c.gamble)},
                                      {"joint", c.joint},
                                      {"local", c.local}});
        }
    }
    return Json{{"result", violations.empty() ? "pass" : "fail"},
                {"cases", cases},
                {"violations", std::move(violations)}};
}

Json run_query(const JointModel& jm, const Json& q, Sampler& sampler)
{
    const CredalNet& net = jm.net();
    const std::string kind = kind_of(q);
    Json out{{"kind", kind}};

    if (kind == "coherence") {
        if (q.contains("node")) {
            out["result"] = io::to_json(is_coherent(local_cone(net, q)));
        } else {
            out["result"] = io::to_json(is_coherent(as_cone(jm)));
        }
    } else if (kind == "member") {
        Gamble f = io::parse_gamble(q.at("gamble"), net.space());
        if (q.contains("node")) {
            out["result"] = member(local_cone(net, q), f);
        } else {
            out["result"] = joint_member(jm, f);
        }
    } else if (kind == "condition-member") {
        Configuration given = io::parse_configuration(q.value("given", Json::object()), net.space());
        out["result"] = condition_member(jm, given, io::parse_gamble(q.at("gamble"), net.space()));
    } else if (kind == "marginal-member") {
        Scope target = io::parse_scope(q.at("marginal"));
        Configuration given = io::parse_configuration(q.value("given", Json::object()), net.space());
        out["result"] = marginal_member(jm, target, given, io::parse_gamble(q.at("gamble"), net.space()));
    } else if (kind == "lower-prevision") {
        Gamble f = io::parse_gamble(q.at("gamble"), net.space());
        AssessmentCone cone = q.contains("node") ? local_cone(net, q) : as_cone(jm);
        out["result"] = Json{{"lower", io::to_json(lower_prevision(cone, f))},
                             {"upper", io::to_json(upper_prevision(cone, f))}};
    } else if (kind == "irrelevance-check") {
        out["result"] = run_irrelevance(jm, q, sampler);
    } else if (kind == "verify-all") {
        VerifyOptions options;
        options.budget = count_field(q, "budget", 10);
        options.seed = sampler.engine()();
        out["result"] = io::to_json(verify_requirements(jm, options));
    } else {
        throw ParseError("unknown query kind '" + kind + "'");
    }
    return out;
}

void describe(std::ostream& err, const Violation& v)
{
    err << "violation " << v.requirement;
    if (!v.node.empty()) {
        err << ": node " << v.node << " given " << to_string(v.observed) << " I=" << to_string(v.irrelevant);
    }
    if (v.gamble) err << " f=" << to_string(*v.gamble);
    if (v.joint) err << " joint=" << (*v.joint ? "true" : "false");
    if (v.local) err << " local=" << (*v.local ? "true" : "false");
    err << " (" << v.detail << ")\n";
}

}  // namespace

SignFlip parse_sign_flip(const std::string& text)
{
    auto first = text.find(':');
    auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) {
        throw ParseError("sign flip must look like node:parent_index:assessment_index, got '" + text + "'");
    }
    SignFlip flip;
    flip.node = text.substr(0, first);
    try {
        flip.parent_index = std::stoul(text.substr(first + 1, second - first - 1));
        flip.assessment_index = std::stoul(text.substr(second + 1));
    } catch (const std::exception&) {
        throw ParseError("bad index in sign flip '" + text + "'");
    }
    return flip;
}

int validate(const Json& network, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        auto doc = io::parse_network_document(network);
        try {
            CredalNet net = io::build_network(doc);
            emit(out, Json{{"valid", true},
                           {"order", credal::validate(net.dag()).order},
                           {"generators", generator_count(net)}});
            return int(kOk);
        } catch (const CycleError& e) {
            err << "invalid: " << e.what() << "\n";
            emit(out, Json{{"valid", false}, {"reason", "cycle"}, {"cycle", e.cycle()}});
        } catch (const IncompleteModelError& e) {
            err << "invalid: " << e.what() << "\n";
            emit(out, Json{{"valid", false}, {"reason", "incomplete"}, {"detail", e.what()}});
        } catch (const IncoherentLocalModelError& e) {
            err << "invalid: " << e.what() << "\n";
            emit(out, Json{{"valid", false},
                           {"reason", "incoherent"},
                           {"node", e.node()},
                           {"given", io::to_json(e.parents())},
                           {"certificate", io::to_json(e.report())["certificate"]}});
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            err << "invalid: " << e.what() << "\n";
            emit(out, Json{{"valid", false}, {"reason", "invalid"}, {"detail", e.what()}});
        }
        return int(kInputError);
    });
}

int query(const Json& network, const Json& queries, const QueryOptions& options, std::ostream& out,
          std::ostream& err)
{
    return guarded(err, [&] {
        auto doc = io::parse_network_document(network);
        const Json* list = queries.is_object() ? optional_field(queries, "queries") : nullptr;
        if (!list || !list->is_array()) throw ParseError("query file needs a 'queries' array");
        auto net = std::make_shared<const CredalNet>(io::build_network(doc));
        JointModel jm = build_joint(net, options.cap);

        Json results = Json::array();
        for (std::size_t i = 0; i < list->size(); ++i) {
            Sampler sampler(options.seed + i);
            try {
                results.push_back(run_query(jm, (*list)[i], sampler));
            } catch (const Error& e) {
                err << "query " << i << ": " << e.what() << "\n";
                throw;
            }
        }
        emit(out, Json{{"seed", options.seed}, {"generators", jm.size()}, {"results", std::move(results)}});
        return int(kOk);
    });
}

int verify(const Json& network, const VerifyCommandOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        auto net = std::make_shared<const CredalNet>(io::parse_network(network));
        JointModel jm = build_joint(net, options.cap);
        Json mutations = Json::array();
        for (const auto& flip : options.flips) {
            jm = jm.with_sign_flipped(flip.node, flip.parent_index, flip.assessment_index);
            mutations.push_back(flip.node + ":" + std::to_string(flip.parent_index) + ":"
                                + std::to_string(flip.assessment_index));
        }

        VerifyOptions vo;
        vo.budget = options.budget;
        vo.seed = options.seed;
        VerificationReport requirements = verify_requirements(jm, vo);
        oracle::PositivityAudit audit =
            oracle::positivity_audit(oracle::witness_net(*net), jm, options.audit_samples, options.seed);

        for (const auto& v : requirements.violations) describe(err, v);
        for (const auto& f : audit.failures) {
            err << "audit failure: E[" << to_string(f.gamble) << "] = " << to_string(f.expectation) << "\n";
        }
        const bool passed = requirements.passed() && audit.passed();
        emit(out, Json{{"passed", passed},
                       {"seed", options.seed},
                       {"generators", jm.size()},
                       {"mutations", std::move(mutations)},
                       {"requirements", io::to_json(requirements)},
                       {"audit", io::to_json(audit)}});
        return int(passed ? kOk : kVerificationFailed);
    });
}

int validate_file(const std::string& network, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] { return validate(io::read_json_file(network), out, err); });
}

int query_file(const std::string& network, const std::string& queries, const QueryOptions& options,
               std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        return query(io::read_json_file(network), io::read_json_file(queries), options, out, err);
    });
}

int verify_file(const std::string& network, const VerifyCommandOptions& options, std::ostream& out,
                std::ostream& err)
{
    return guarded(err, [&] { return verify(io::read_json_file(network), options, out, err); });
}

}  // namespace credal::cli
