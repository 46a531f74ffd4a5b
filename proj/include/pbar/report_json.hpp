#pragma once

#include <span>

#include <json.hpp>

#include "pbar/congruence.hpp"
#include "pbar/scan.hpp"

namespace pbar {

// Field order is fixed so repeated runs serialize byte-identically. Timing is
// deliberately not part of the payload.
//
//   {"id", "claim": {"A","B","M"}?, "status", "range", "witness": {"n","index","residue"}?, "source"}
nlohmann::ordered_json to_json(const CongruenceClaim& claim);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(std::span<const VerificationReport> reports);

//   {"claim": {...}, "checks", "label": "KNOWN" | "CANDIDATE"}
nlohmann::ordered_json to_json(const ScanHit& hit);
nlohmann::ordered_json to_json(std::span<const ScanHit> hits);

} // namespace pbar
