#include "pbar/report_json.hpp"

#include <string>

namespace pbar {

using nlohmann::ordered_json;

ordered_json to_json(const CongruenceClaim& claim)
{
    ordered_json j;
    j["A"] = claim.A;
    j["B"] = claim.B;
    j["M"] = claim.M;
    return j;
}

ordered_json to_json(const VerificationReport& report)
{
    ordered_json j;
    j["id"] = report.id;
    if (report.claim)
        j["claim"] = to_json(*report.claim);
    j["status"] = std::string(to_string(report.status));
    j["range"] = report.range;
    if (report.witness) {
        ordered_json w;
        w["n"] = report.witness->n;
        w["index"] = report.witness->index;
        w["residue"] = report.witness->residue;
        j["witness"] = std::move(w);
    }
    j["source"] = report.source;
    return j;
}

ordered_json to_json(std::span<const VerificationReport> reports)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

ordered_json to_json(const ScanHit& hit)
{
    ordered_json j;
    j["claim"] = to_json(hit.claim);
    j["checks"] = hit.checks;
    j["label"] = hit.known ? "KNOWN" : "CANDIDATE";
    return j;
}

ordered_json to_json(std::span<const ScanHit> hits)
{
    ordered_json arr = ordered_json::array();
    for (const auto& h : hits)
        arr.push_back(to_json(h));
    return arr;
}

} // namespace pbar
