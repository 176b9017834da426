// The acceptance suite: ten exact checks with seeded random instances.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symfock {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr std::uint64_t kDefaultSeed = 20240611;

CriterionResult run_criterion(int id, std::uint64_t seed);
// Runs the listed criteria (all ten when empty), reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& report = {});
std::string format_result(const CriterionResult& r);

}  // namespace symfock
