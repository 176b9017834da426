// Runs the acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symfock/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"symfock acceptance suite"};
    std::uint64_t seed = symfock::kDefaultSeed;
    std::vector<int> only;
    app.add_option("--seed", seed, "random seed");
    app.add_option("--only", only, "criterion numbers to run")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    symfock::run_acceptance(seed, only, [&](const symfock::CriterionResult& r) {
        std::cout << symfock::format_result(r) << std::endl;
        failed += !r.pass;
    });
    std::cout << (failed ? "acceptance: FAIL (" + std::to_string(failed) + " criteria)" : std::string("acceptance: PASS"))
              << std::endl;
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
