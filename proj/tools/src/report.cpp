#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace olymp::cli {

void RunReport::add(const std::string& name, bool pass, nlohmann::json detail) {
    claims.push_back(Claim{name, pass, std::move(detail)});
}

bool RunReport::all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

nlohmann::json RunReport::to_json() const {
    std::vector<Claim> ordered = claims;
    std::sort(ordered.begin(), ordered.end(),
              [](const Claim& a, const Claim& b) { return a.name < b.name; });

    nlohmann::json claims_json = nlohmann::json::array();
    for (const Claim& claim : ordered) {
        nlohmann::json entry{{"name", claim.name}, {"pass", claim.pass}};
        if (!claim.detail.empty()) entry["detail"] = claim.detail;
        claims_json.push_back(std::move(entry));
    }

    nlohmann::json doc{{"command", command}, {"claims", std::move(claims_json)},
                       {"runtime_ms", runtime_ms}};
    if (seeded) doc["seed"] = seed;
    if (!output.is_null()) doc["output"] = output;
    return doc;
}

std::string RunReport::summary() const {
    std::vector<Claim> ordered = claims;
    std::sort(ordered.begin(), ordered.end(),
              [](const Claim& a, const Claim& b) { return a.name < b.name; });

    std::ostringstream out;
    out << command;
    if (seeded) out << " (seed " << seed << ")";
    out << "\n";
    for (const Claim& claim : ordered) {
        out << "  [" << (claim.pass ? "pass" : "FAIL") << "] " << claim.name << "\n";
    }
    out << (all_pass() ? "OK" : "FAILED") << " (" << claims.size() << " claim"
        << (claims.size() == 1 ? "" : "s") << ")\n";
    return out.str();
}

nlohmann::json strip_timing(nlohmann::json doc) {
    if (doc.is_object()) {
        doc.erase("runtime_ms");
        for (auto& [key, value] : doc.items()) {
            (void)key;
            value = strip_timing(std::move(value));
        }
    } else if (doc.is_array()) {
        for (auto& value : doc) value = strip_timing(std::move(value));
    }
    return doc;
}

}  // namespace olymp::cli
