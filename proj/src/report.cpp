#include "wha/report.hpp"

#include <sstream>

#include "json.hpp"

namespace wha {

std::string render_text(const std::vector<CheckResult>& results)
{
    std::ostringstream out;
    int failed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.algebra << " :: " << r.check;
        if (!r.pass)
            ++failed;
        if (!r.witness.empty())
            out << "\n       " << r.witness;
        out << "\n";
    }
    out << results.size() - static_cast<size_t>(failed) << "/" << results.size() << " checks passed\n";
    return out.str();
}

std::string render_json(const std::vector<CheckResult>& results, const std::string& command,
                        const std::string& config_summary, unsigned long long seed,
                        bool with_timings, const std::string& timestamp)
{
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["config"] = config_summary;
    doc["seed"] = seed;
    doc["timestamp"] = timestamp;
    doc["all_passed"] = all_passed(results);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["algebra"] = r.algebra;
        e["check"] = r.check;
        e["status"] = r.pass ? "pass" : "fail";
        if (!r.witness.empty())
            e["witness"] = r.witness;
        if (with_timings)
            e["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(e));
    }
    doc["results"] = std::move(arr);
    return doc.dump(2) + "\n";
}

} // namespace wha
