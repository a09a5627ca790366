#pragma once

#include <json.hpp>

#include "ccs/core/pseudo_configuration.hpp"
#include "ccs/extraction/bound.hpp"
#include "ccs/extraction/pipeline.hpp"
#include "ccs/workbench/realizability.hpp"

namespace ccs {

inline constexpr int kJsonSchemaVersion = 1;

// Top-level reports carry "schema_version". Spike indices are 1-based in every
// report; big integers are decimal strings.

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const ConvexCertificate& cert);
nlohmann::json to_json(const ChainStats& stats);
/// Decomposition with the chain statistics of every spike.
nlohmann::json to_json(const PseudoConfiguration& cfg, const SpikeDecomposition& dec);
nlohmann::json to_json(const CertificateTrace& trace);
nlohmann::json to_json(const PipelineResult& result);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const RealizabilityHint& hint);

}  // namespace ccs
