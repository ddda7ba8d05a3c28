#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sumcat {

/// Outcome of a verification run: which identity, over what scope, how many
/// tuples, and a replayable dump for every violation.
struct CheckReport {
    std::string check;
    std::string mode;
    uint64_t tuples_checked = 0;
    std::vector<nlohmann::json> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }

    void fail(nlohmann::json j, size_t cap = 32) {
        if (failures.size() < cap) failures.push_back(std::move(j));
        else if (failures.size() == cap) failures.push_back({{"truncated", true}});
    }

    nlohmann::json to_json() const {
        return {{"axiom", check},
                {"mode", mode},
                {"tuples_checked", tuples_checked},
                {"failures", failures},
                {"notes", notes},
                {"passed", passed()}};
    }

    /// Merge a sub-report, prefixing its check name.
    void absorb(const CheckReport& sub) {
        tuples_checked += sub.tuples_checked;
        for (const auto& f : sub.failures) {
            nlohmann::json j = f;
            j["check"] = sub.check;
            failures.push_back(std::move(j));
        }
        for (const auto& n : sub.notes) notes.push_back(sub.check + ": " + n);
    }
};

}  // namespace sumcat
