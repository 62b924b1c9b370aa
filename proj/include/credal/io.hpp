#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "credal/cone.hpp"
#include "credal/net.hpp"
#include "credal/oracle.hpp"

// JSON interchange. Rationals always travel as strings ("3", "-1/4").
// Structural problems with a document raise ParseError; documents that
// parse but describe an invalid network raise the semantic errors of the
// net module.
namespace credal::io {

using Json = nlohmann::json;

struct LocalEntry
{
    NodeId node;
    std::map<NodeId, std::string> given;
    std::vector<RationalVector> gambles;
};

// A network document after syntax checks only.
struct NetworkDocument
{
    std::vector<VariableSpace> variables;
    std::vector<Edge> edges;
    std::vector<LocalEntry> local_models;
};

NetworkDocument parse_network_document(const Json& doc);

// Builds and validates the network. Throws CycleError, IncompleteModelError
// (missing or duplicate parent configuration), IncoherentLocalModelError,
// ScopeError or UnknownNodeError.
CredalNet build_network(const NetworkDocument& doc);

inline CredalNet parse_network(const Json& doc) { return build_network(parse_network_document(doc)); }

Json serialize_network(const CredalNet& net);

Json read_json_file(const std::string& path);

Rational parse_rational_json(const Json& value);
Json to_json(const Rational& value);
Json to_json(const RationalVector& values);
Json to_json(const Configuration& config);
Json to_json(const Gamble& f);
Json to_json(const Scope& scope);

// {"a": "a0", ...} on the given sub-scope of the net.
Configuration parse_configuration(const Json& value, const Space& full);
// {"scope": [...], "values": [...]} with values in lexicographic order.
Gamble parse_gamble(const Json& value, const Space& full);
Scope parse_scope(const Json& value);

Json to_json(const CoherenceReport& report);
Json to_json(const VerificationReport& report);
Json to_json(const oracle::PositivityAudit& audit);

}  // namespace credal::io
