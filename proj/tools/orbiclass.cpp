#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "orbiclass/cli.hpp"

using namespace orbiclass;

namespace {

struct Flags {
    std::string input, family, fixture, action, format = "json", output;
    std::size_t cap = 0, coset_bound = kDefaultCosetBound, threads = 0;
    unsigned long long seed = 0;
    int dimension = -1;
    bool quotient = false, pi1 = false, verbose = false;
};

void common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--threads", f.threads, "worker threads (default: hardware)");
    cmd->add_option("--output,-o", f.output, "write the report here instead of stdout");
    cmd->add_flag("--verbose,-v", f.verbose, "timings on stderr");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbiclass: manifold verdicts for quotients R^n/G and simplicial cross-checks"};
    app.require_subcommand(1);
    Flags f;

    auto* classify = app.add_subcommand("classify", "decide the manifold categories of R^n/G");
    classify->add_option("--input", f.input, "group JSON file");
    classify->add_option("--family", f.family, "family spec, e.g. \"dihedral(4)\"");
    classify->add_option("--cap", f.cap, "closure cap (default 100000)");
    classify->add_option("--seed", f.seed, "conjugate by a random signed permutation first");
    common(classify, f);

    auto* verify = app.add_subcommand("verify-complex", "homology, manifold tests and optional quotient pipeline");
    verify->add_option("--input", f.input, "complex file (line format or JSON)");
    verify->add_option("--fixture", f.fixture, "built-in complex");
    verify->add_option("--action", f.action, "action file; runs the quotient pipeline");
    verify->add_flag("--quotient", f.quotient, "quotient by the fixture's action");
    verify->add_flag("--pi1", f.pi1, "enumerate pi_1 of the input complex too");
    verify->add_option("--dimension", f.dimension, "manifold dimension to test (default: complex dimension)");
    verify->add_option("--coset-bound", f.coset_bound, "coset table row bound (default 50000)");
    common(verify, f);

    auto* quotient = app.add_subcommand("quotient", "orbit complex of the twice subdivided input");
    quotient->add_option("--input", f.input, "complex file");
    quotient->add_option("--fixture", f.fixture, "built-in complex with its action");
    quotient->add_option("--action", f.action, "action file");
    common(quotient, f);

    auto* catalog = app.add_subcommand("catalog", "list families and fixtures, or emit one");
    catalog->add_option("--family", f.family, "emit the group JSON of this family");
    catalog->add_option("--fixture", f.fixture, "emit this fixture");
    catalog->add_option("--cap", f.cap, "cap stored in the emitted group JSON");
    common(catalog, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code::parse_error;
    }

    RunConfig config;
    config.command = command_from_string(app.get_subcommands().front()->get_name());
    if (!f.input.empty()) config.input = f.input;
    if (!f.family.empty()) config.family = f.family;
    if (!f.fixture.empty()) config.fixture = f.fixture;
    if (!f.action.empty()) config.action = f.action;
    if (!f.output.empty()) config.output = f.output;
    if (f.dimension >= 0) config.dimension = f.dimension;
    for (auto* cmd : {classify, catalog})
        if (cmd->count("--cap")) {
            if (f.cap == 0) {
                std::cerr << "error: ParseError: --cap must be positive\n";
                return exit_code::parse_error;
            }
            config.cap = f.cap;
        }
    if (classify->count("--seed")) config.seed = f.seed;
    config.coset_bound = f.coset_bound;
    config.use_fixture_action = f.quotient;
    config.pi1 = f.pi1;
    config.format = f.format == "text" ? OutputFormat::text : OutputFormat::json;
    config.threads = f.threads;
    config.verbose = f.verbose;

    const RunResult r = run(config);
    if (!r.out.empty()) std::fwrite(r.out.data(), 1, r.out.size(), stdout);
    if (!r.err.empty()) std::fwrite(r.err.data(), 1, r.err.size(), stderr);
    return r.code;
}
