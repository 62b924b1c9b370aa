#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "credal/commands.hpp"

int main(int argc, char** argv)
{
    using namespace credal::cli;

    CLI::App app{"Exact inference for credal networks under epistemic irrelevance"};
    app.require_subcommand(1);

    std::string network;
    std::string queries;

    auto* validate_cmd = app.add_subcommand("validate", "Check a network file");
    validate_cmd->add_option("network", network, "network JSON")->required();

    QueryOptions query_options;
    auto* query_cmd = app.add_subcommand("query", "Run a query file against a network");
    query_cmd->add_option("network", network, "network JSON")->required();
    query_cmd->add_option("queries", queries, "query JSON")->required();
    query_cmd->add_option("--seed", query_options.seed, "seed for sampled sweeps");
    query_cmd->add_option("--cap", query_options.cap, "maximum number of joint generators");

    VerifyCommandOptions verify_options;
    std::vector<std::string> flips;
    auto* verify_cmd = app.add_subcommand("verify", "Verify the joint model of a network");
    verify_cmd->add_option("network", network, "network JSON")->required();
    verify_cmd->add_option("--budget", verify_options.budget, "random probes per check");
    verify_cmd->add_option("--seed", verify_options.seed, "seed for sampled sweeps");
    verify_cmd->add_option("--cap", verify_options.cap, "maximum number of joint generators");
    verify_cmd->add_option("--audit-samples", verify_options.audit_samples, "conic combinations audited");
    verify_cmd->add_option("--flip-sign", flips, "negate a local gamble in the joint: node:parent:index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    if (*validate_cmd) return validate_file(network, std::cout, std::cerr);
    if (*query_cmd) return query_file(network, queries, query_options, std::cout, std::cerr);

    try {
        for (const auto& f : flips) verify_options.flips.push_back(parse_sign_flip(f));
    } catch (const credal::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    }
    return verify_file(network, verify_options, std::cout, std::cerr);
}
