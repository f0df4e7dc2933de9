#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "core/cubical.hpp"
#include "core/cubset.hpp"

namespace mbx::suite {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;
    bool passed() const {
        for (const auto& c : criteria)
            if (!c.passed) return false;
        return true;
    }
};

// The acceptance battery. Criterion 10 (determinism) reruns the other nine
// and compares the serialized reports byte for byte.
SuiteResult run_acceptance(std::uint64_t seed);

nlohmann::json to_json(const SuiteResult& r);

// Shared corpus: all posets with at most three elements (up to iso).
std::vector<cubset::Poset> corpus_posets();
// pcpc corpus: constants, linearized poset sets (D = 3), upgraded resolutions.
std::vector<std::pair<std::string, cubical::CubicalObject>> corpus_pcpc_objects();
// cc corpus: constants and linearized poset sets only.
std::vector<std::pair<std::string, cubical::CubicalObject>> corpus_cc_objects();

}  // namespace mbx::suite
