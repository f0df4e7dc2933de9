#pragma once

#include <string>
#include <vector>

namespace mbx {

struct Violation {
    std::string where;     // "degree 2", "degree 3, i=1 j=2 (0,1)", ...
    std::string identity;  // which law failed: "d∘d = 0", "∂s id", ...
    std::string detail;
};

// Outcome of a validation or verification run. Mathematical failures are
// violations, not exceptions.
struct Report {
    std::string subject;
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // warnings, certifications, summaries

    bool passed() const { return violations.empty(); }

    void fail(std::string where, std::string identity, std::string detail = "") {
        violations.push_back({std::move(where), std::move(identity), std::move(detail)});
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    void absorb(const Report& sub) {
        for (const auto& v : sub.violations)
            violations.push_back({sub.subject + ": " + v.where, v.identity, v.detail});
        for (const auto& n : sub.notes) notes.push_back(sub.subject + ": " + n);
    }
};

}  // namespace mbx
