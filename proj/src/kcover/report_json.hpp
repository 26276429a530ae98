#pragma once

#include <nlohmann/json.hpp>

#include "kcover/cover.hpp"
#include "kcover/extremal.hpp"
#include "kcover/oracle.hpp"
#include "kcover/reduce.hpp"
#include "kcover/shrink.hpp"

// JSON shapes consumed by the CLI and C API. Field names are part of the
// external interface; bump kSchemaVersion on any breaking change.
namespace kcover::json {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json graph_summary(const Graph& g);

Json to_json(const cover::CoverReport& r);
Json to_json(const std::vector<cover::Truss>& trusses, int l);
Json to_json(const extremal::ExtremalWitness& w);
Json to_json(const extremal::Recognition& r, int k);
Json to_json(const extremal::ConvexMax& c);
Json to_json(const extremal::CounterexampleReport& r);
Json to_json(const shrink::Trace& t);
Json to_json(const reduce::ContractionReport& r);
Json to_json(const reduce::Reduction& r);
Json to_json(const shrink::TraceCheck& c);
Json to_json(const oracle::SearchReport& r);

// Throws parse_error on a malformed trace document.
shrink::Trace trace_from_json(const Json& j);

}  // namespace kcover::json
