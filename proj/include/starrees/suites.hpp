#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "starrees/star_config.hpp"

namespace starrees {

struct SuiteReport {
    std::string name;
    int version = 1;
    std::string field;
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
    // Empty means the suite's own default field.
    std::string field;
    std::uint32_t seed = 101;
};

struct SuiteInfo {
    std::string name;
    std::string summary;
    std::string default_field;
};

const std::vector<SuiteInfo>& suite_catalog();
// Throws Parameter for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

// Corpora shared by the suites and the tests.
struct NamedConfig {
    std::string label;
    StarConfig cfg;
};
// Seeded random U over the field, n in 2..5, r in 1..3.
std::vector<NamedConfig> random_minors_corpus(const Field& field, std::uint32_t seed, int count = 20);
// Small integer instances, n in 2..4, r in 1..2, every pair of forms independent.
std::vector<NamedConfig> rees_corpus(const Field& field);
// Integer instances with n <= 5, r <= 3.
std::vector<NamedConfig> recursion_corpus(const Field& field, std::uint32_t seed);

StarConfig worked_example_config(const Field& field = Field::rationals());

} // namespace starrees
