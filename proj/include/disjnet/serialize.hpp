#pragma once

#include <nlohmann/json.hpp>

#include "disjnet/dynamics.hpp"
#include "disjnet/network.hpp"
#include "disjnet/ranks.hpp"
#include "disjnet/report.hpp"
#include "disjnet/verify.hpp"

// JSON forms, kept in one translation-unit-heavy header so the core headers
// stay light:
//   TruthTableNetwork  {"n": k, "table": [s0, ...]} with little-endian state
//                      indices
//   Topology           sorted array of sorted vertex arrays; n is recovered
//                      from the full set, which every topology contains
//   ExtremalScan       {"n", "max_rank", "achiever_count", "achievers": [...]}
//                      with achievers as edge-list objects
//   AnalysisReport     schema-versioned object, lossless round trip
namespace disjnet {

void to_json(nlohmann::json& j, const TruthTableNetwork& f);
void from_json(const nlohmann::json& j, TruthTableNetwork& f);

void to_json(nlohmann::json& j, const Topology& t);
void from_json(const nlohmann::json& j, Topology& t);

void to_json(nlohmann::json& j, const DirectedGraph& g);
void from_json(const nlohmann::json& j, DirectedGraph& g);

void to_json(nlohmann::json& j, const RankTriple& r);
void from_json(const nlohmann::json& j, RankTriple& r);

void to_json(nlohmann::json& j, const ExtremalScan& s);

void to_json(nlohmann::json& j, const PointSetSummary& s);
void from_json(const nlohmann::json& j, PointSetSummary& s);

void to_json(nlohmann::json& j, const StructuralSummary& s);
void from_json(const nlohmann::json& j, StructuralSummary& s);

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

void to_json(nlohmann::json& j, const VerifyResult& r);

}  // namespace disjnet
