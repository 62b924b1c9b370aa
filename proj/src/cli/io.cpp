#include "credal/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace credal::io {

namespace {

const Json& field(const Json& obj, const char* key, const char* where)
{
    if (!obj.is_object()) {
        throw ParseError(std::string(where) + ": expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(std::string(where) + ": missing field '" + key + "'");
    }
    return *it;
}

std::string string_value(const Json& v, const char* where)
{
    if (!v.is_string()) {
        throw ParseError(std::string(where) + ": expected a string");
    }
    return v.get<std::string>();
}

const Json& array_value(const Json& v, const char* where)
{
    if (!v.is_array()) {
        throw ParseError(std::string(where) + ": expected an array");
    }
    return v;
}

std::map<NodeId, std::string> label_map(const Json& v, const char* where)
{
    if (!v.is_object()) {
        throw ParseError(std::string(where) + ": expected an object of node -> value");
    }
    std::map<NodeId, std::string> out;
    for (auto it = v.begin(); it != v.end(); ++it) {
        out.emplace(it.key(), string_value(it.value(), where));
    }
    return out;
}

RationalVector rational_list(const Json& v, const char* where)
{
    RationalVector out;
    for (const auto& x : array_value(v, where)) out.push_back(parse_rational_json(x));
    return out;
}

}  // namespace

Rational parse_rational_json(const Json& value)
{
    if (!value.is_string()) {
        throw ParseError("rationals must be written as strings, got " + value.dump());
    }
    return parse_rational(value.get<std::string>());
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RationalVector& values)
{
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Json to_json(const Configuration& config)
{
    Json out = Json::object();
    for (const auto& [id, label] : config.labels()) out[id] = label;
    return out;
}

Json to_json(const Gamble& f)
{
    return Json{{"scope", to_json(f.scope())}, {"values", to_json(f.table())}};
}

Json to_json(const Scope& scope)
{
    Json out = Json::array();
    for (const auto& id : scope) out.push_back(id);
    return out;
}

Scope parse_scope(const Json& value)
{
    std::vector<NodeId> ids;
    for (const auto& v : array_value(value, "scope")) ids.push_back(string_value(v, "scope"));
    return Scope(std::move(ids));
}

Configuration parse_configuration(const Json& value, const Space& full)
{
    auto labels = label_map(value, "configuration");
    std::vector<NodeId> ids;
    for (const auto& [id, label] : labels) {
        if (!full.position(id)) throw UnknownNodeError("unknown node '" + id + "'");
        ids.push_back(id);
    }
    return Configuration::from_labels(full.restrict(Scope(std::move(ids))), labels);
}

Gamble parse_gamble(const Json& value, const Space& full)
{
    Scope scope = parse_scope(field(value, "scope", "gamble"));
    for (const auto& id : scope) {
        if (!full.position(id)) throw UnknownNodeError("unknown node '" + id + "'");
    }
    return Gamble(full.restrict(scope), rational_list(field(value, "values", "gamble"), "gamble values"));
}

// ---------------------------------------------------------------- network

NetworkDocument parse_network_document(const Json& doc)
{
    NetworkDocument out;
    for (const auto& v : array_value(field(doc, "variables", "network"), "variables")) {
        VariableSpace var;
        var.id = string_value(field(v, "id", "variable"), "variable id");
        for (const auto& label : array_value(field(v, "values", "variable"), "variable values")) {
            var.values.push_back(string_value(label, "variable value"));
        }
        out.variables.push_back(std::move(var));
    }
    auto edges = doc.find("edges");
    if (edges != doc.end()) {
        for (const auto& e : array_value(*edges, "edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("edges: each edge must be a [parent, child] pair");
            }
            out.edges.emplace_back(string_value(e[0], "edge"), string_value(e[1], "edge"));
        }
    }
    for (const auto& m : array_value(field(doc, "local_models", "network"), "local_models")) {
        LocalEntry entry;
        entry.node = string_value(field(m, "node", "local model"), "local model node");
        auto given = m.find("given");
        if (given != m.end()) entry.given = label_map(*given, "local model given");
        for (const auto& g : array_value(field(m, "gambles", "local model"), "local model gambles")) {
            entry.gambles.push_back(rational_list(g, "local gamble"));
        }
        out.local_models.push_back(std::move(entry));
    }
    return out;
}

CredalNet build_network(const NetworkDocument& doc)
{
    std::vector<NodeId> nodes;
    for (const auto& v : doc.variables) nodes.push_back(v.id);
    Dag dag(nodes, doc.edges);
    Space full(doc.variables);

    auto check = validate(dag);
    if (!check.acyclic) throw CycleError(check.cycle);

    std::map<NodeId, std::vector<std::optional<AssessmentCone>>> slots;
    for (const auto& s : dag.nodes()) {
        slots[s].resize(full.restrict(dag.parents(s)).size());
    }
    for (const auto& entry : doc.local_models) {
        if (!dag.contains(entry.node)) {
            throw UnknownNodeError("local model for unknown node '" + entry.node + "'");
        }
        const Space parents = full.restrict(dag.parents(entry.node));
        const Space node_space = full.restrict(Scope{entry.node});
        Configuration given = Configuration::from_labels(parents, entry.given);
        auto& slot = slots[entry.node][given.index()];
        if (slot) {
            throw IncompleteModelError("duplicate local model for '" + entry.node + "' given "
                                       + to_string(given));
        }
        std::vector<Gamble> gambles;
        for (const auto& values : entry.gambles) {
            gambles.emplace_back(node_space, values);
        }
        slot.emplace(node_space, std::move(gambles));
    }

    std::map<NodeId, std::vector<AssessmentCone>> cones;
    for (auto& [s, list] : slots) {
        const Space parents = full.restrict(dag.parents(s));
        for (std::size_t xp = 0; xp < list.size(); ++xp) {
            if (!list[xp]) {
                throw IncompleteModelError("missing local model for '" + s + "' given "
                                           + to_string(Configuration(parents, xp)));
            }
            cones[s].push_back(std::move(*list[xp]));
        }
    }
    return CredalNet(std::move(dag), doc.variables, std::move(cones));
}

Json serialize_network(const CredalNet& net)
{
    Json doc;
    doc["variables"] = Json::array();
    for (const auto& v : net.space().variables()) {
        doc["variables"].push_back(Json{{"id", v.id}, {"values", v.values}});
    }
    doc["edges"] = Json::array();
    for (const auto& [p, c] : net.dag().edges()) doc["edges"].push_back(Json::array({p, c}));
    doc["local_models"] = Json::array();
    for (const auto& local : net.locals()) {
        for (std::size_t xp = 0; xp < local.cones.size(); ++xp) {
            Json gambles = Json::array();
            for (const auto& g : local.cones[xp].assessment()) gambles.push_back(to_json(g.table()));
            doc["local_models"].push_back(Json{{"node", local.node},
                                               {"given", to_json(Configuration(local.parent_space, xp))},
                                               {"gambles", std::move(gambles)}});
        }
    }
    return doc;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------- reports

Json to_json(const CoherenceReport& report)
{
    Json out{{"coherent", report.coherent}, {"margin", to_json(report.margin)}};
    if (report.coherent) {
        out["witness"] = to_json(report.witness);
    } else {
        out["certificate"] = Json{{"assessment_weights", to_json(report.assessment_weights)},
                                  {"indicator_weights", to_json(report.indicator_weights)}};
    }
    return out;
}

Json to_json(const VerificationReport& report)
{
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json j{{"requirement", v.requirement}, {"detail", v.detail}};
        if (!v.node.empty()) {
            j["node"] = v.node;
            j["given"] = to_json(v.observed);
            j["irrelevant"] = to_json(v.irrelevant);
        }
        if (v.gamble) j["gamble"] = to_json(*v.gamble);
        if (v.joint) j["joint"] = *v.joint;
        if (v.local) j["local"] = *v.local;
        violations.push_back(std::move(j));
    }
    return Json{{"seed", report.seed},
                {"budget", report.budget},
                {"generators", report.generators},
                {"checks",
                 Json{{"G1", report.local_checks},
                      {"G2", report.irrelevance_checks},
                      {"G3", report.coherence_checks},
                      {"G4", report.structural_checks}}},
                {"passed", report.passed()},
                {"violations", std::move(violations)}};
}

Json to_json(const oracle::PositivityAudit& audit)
{
    Json failures = Json::array();
    for (const auto& f : audit.failures) {
        failures.push_back(Json{{"gamble", to_json(f.gamble)}, {"expectation", to_json(f.expectation)}});
    }
    return Json{{"seed", audit.seed},
                {"samples", audit.samples},
                {"passed", audit.passed()},
                {"failures", std::move(failures)}};
}

}  // namespace credal::io
