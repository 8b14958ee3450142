#pragma once

#include <string>
#include <vector>

namespace wha {

struct CheckResult {
    std::string algebra;
    std::string check;
    bool pass = false;
    std::string witness;     // failure detail or supporting evidence
    long long elapsed_ms = 0;
};

inline bool all_passed(const std::vector<CheckResult>& rs)
{
    for (const auto& r : rs)
        if (!r.pass)
            return false;
    return true;
}

// Rendering lives in report.cpp (JSON via nlohmann, plain text).
std::string render_text(const std::vector<CheckResult>& results);
std::string render_json(const std::vector<CheckResult>& results, const std::string& command,
                        const std::string& config_summary, unsigned long long seed,
                        bool with_timings, const std::string& timestamp);

} // namespace wha
