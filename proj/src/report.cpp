#include "sclean/errors.hpp"
#include "sclean/theorems.hpp"

namespace sclean {

using nlohmann::json;

json to_json(const ClaimReport& report, bool with_timing) {
    json j;
    j["claim_id"] = report.claim_id;
    j["ring"] = report.ring;
    j["sigma"] = report.sigma;
    j["status"] = std::string(to_string(report.status));
    j["checked"] = report.checked;
    j["witness"] = report.witness ? *report.witness : json(nullptr);
    j["elapsed_ms"] = with_timing ? json(report.elapsed_ms) : json(nullptr);
    j["seed"] = report.seed ? json(*report.seed) : json(nullptr);
    j["reason"] = report.reason.empty() ? json(nullptr) : json(report.reason);
    j["note"] = report.note.is_null() || report.note.empty() ? json(nullptr) : report.note;
    return j;
}

ClaimReport report_from_json(const json& j) {
    try {
        ClaimReport r;
        r.claim_id = j.at("claim_id").get<std::string>();
        r.ring = j.at("ring").get<std::string>();
        r.sigma = j.at("sigma").get<std::string>();
        r.status = parse_status(j.at("status").get<std::string>());
        r.checked = j.at("checked").get<std::uint64_t>();
        if (j.contains("witness") && !j["witness"].is_null()) r.witness = j["witness"];
        if (j.contains("elapsed_ms") && j["elapsed_ms"].is_number()) {
            r.elapsed_ms = j["elapsed_ms"].get<double>();
        }
        if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("reason") && j["reason"].is_string()) r.reason = j["reason"].get<std::string>();
        if (j.contains("note")) r.note = j["note"];
        return r;
    } catch (const json::exception& e) {
        throw SpecError(std::string("malformed claim report: ") + e.what());
    }
}

}  // namespace sclean
