#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "orbiclass/group.hpp"
#include "orbiclass/homology.hpp"
#include "orbiclass/io.hpp"
#include "orbiclass/presentation.hpp"

namespace orbiclass {

enum class Command { classify, verify_complex, quotient, catalog };
enum class OutputFormat { json, text };

Command command_from_string(const std::string& name);

struct RunConfig {
    Command command = Command::classify;
    std::optional<std::string> input;
    std::optional<std::string> family;
    std::optional<std::string> fixture;
    std::optional<std::string> action;
    /// verify-complex: quotient by the fixture's own action.
    bool use_fixture_action = false;
    /// verify-complex: also present and enumerate pi_1 of the input.
    bool pi1 = false;
    std::optional<int> dimension;
    /// Unset means the group file's cap, then kDefaultClosureCap.
    std::optional<std::size_t> cap;
    std::size_t coset_bound = kDefaultCosetBound;
    OutputFormat format = OutputFormat::json;
    /// classify: conjugate the generators by a random signed permutation.
    std::optional<unsigned long long> seed;
    std::size_t threads = 0;
    std::optional<std::string> output;
    bool verbose = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 2;
inline constexpr int bound_exceeded = 3;
inline constexpr int internal_error = 4;
}  // namespace exit_code

struct RunResult {
    int code = exit_code::ok;
    std::string out;
    std::string err;
};

/// Runs one command. Never throws; errors become an exit code and a
/// structured message in err.
RunResult run(const RunConfig& config);

/// Classification pipeline shared with the acceptance runner.
VerdictReport classify_group(const GroupInput& g, std::size_t cap);
/// Q g Q^T for a signed permutation Q drawn from the seed.
std::vector<Matrix> conjugate_by_signed_permutation(const std::vector<Matrix>& generators, unsigned long long seed);

/// Homology per degree as strings such as "Z", "Z^2", "Z/2", "0".
Json homology_to_json(const HomologyResult& h);

/// pi_1 section: raw and simplified presentation sizes, abelianization and
/// the coset enumeration outcome.
Json pi1_report(const SimplicialComplex& k, std::size_t bound, bool& closed);

}  // namespace orbiclass
