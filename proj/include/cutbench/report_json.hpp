#pragma once

#include <string>

#include <json.hpp>

#include "cutbench/certificate.hpp"
#include "cutbench/sweep.hpp"

namespace cutbench {

/// Line-oriented JSON. Certificates:
///   {"type":"certificate","graph":<graph6>,"n":..,"checker":..,"k":..,
///    "premises_hold":..,"verdict":"witness"|"violation"|"premises_fail",
///    "witness":{"vertices":[..]} | {"matching":[[u,v],..]} | null,
///    "evidence":[{"removed_vertices":[..],"removed_edges":[[u,v],..],"components":[[..],..]},..],
///    "detail":..}
/// Reports:
///   {"type":"report","checker":..,"k":..,"n_range":[lo,hi],"graphs_examined":..,
///    "premises_held":..,"witnesses":..,"examined_by_order":[..],
///    "satisfiers":[..],"violations":[..]}
/// plus "diameter"/"periphery_size" for special-periphery and, when run
/// metadata is requested, "elapsed_ms" and "worker_count". Without run
/// metadata the output is byte-identical across runs and worker counts.
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SweepReport& r, bool with_run_metadata);

/// One compact line, no trailing newline.
std::string json_line(const nlohmann::json& j);

}  // namespace cutbench
