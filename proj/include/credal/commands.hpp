#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "credal/io.hpp"

// The command-line surface, callable in-process. Each command writes its
// JSON report to `out`, human-readable diagnostics to `err`, and returns
// the process exit code.
namespace credal::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kParseError = 3,
};

// Negate local assessment gamble `assessment_index` of (node, parent
// configuration `parent_index`) inside the joint after it is built.
struct SignFlip
{
    NodeId node;
    std::size_t parent_index = 0;
    std::size_t assessment_index = 0;
};

// "node:parent_index:assessment_index"
SignFlip parse_sign_flip(const std::string& text);

struct QueryOptions
{
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultGeneratorCap;
};

struct VerifyCommandOptions
{
    std::size_t budget = 10;
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultGeneratorCap;
    std::size_t audit_samples = 50;
    std::vector<SignFlip> flips;
};

int validate(const io::Json& network, std::ostream& out, std::ostream& err);
int query(const io::Json& network, const io::Json& queries, const QueryOptions& options,
          std::ostream& out, std::ostream& err);
int verify(const io::Json& network, const VerifyCommandOptions& options, std::ostream& out,
           std::ostream& err);

// File-based wrappers; unreadable or malformed files give kParseError.
int validate_file(const std::string& network, std::ostream& out, std::ostream& err);
int query_file(const std::string& network, const std::string& queries, const QueryOptions& options,
               std::ostream& out, std::ostream& err);
int verify_file(const std::string& network, const VerifyCommandOptions& options, std::ostream& out,
                std::ostream& err);

}  // namespace credal::cli
