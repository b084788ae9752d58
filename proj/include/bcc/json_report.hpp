#pragma once

#include <json.hpp>

#include "bcc/dyadic.hpp"
#include "bcc/exact_oracles.hpp"
#include "bcc/graph_core.hpp"
#include "bcc/hansel.hpp"
#include "bcc/mv_coloring.hpp"
#include "bcc/peeling.hpp"

namespace bcc {

// Deterministic JSON views of the core types. Exact quantities stay
// exact: dyadic rationals are numerator/exponent pairs (numerator as a
// decimal string, it may exceed 64 bits), weights and counts are
// integers. Report-level reals (beta, bound functions) are doubles.
using Json = nlohmann::ordered_json;

Json to_json(const Dyadic& d);
Json to_json(const Edge& e);
Json to_json(const VertexSet& s);
Json to_json(const PartitionReport& r);
Json to_json(const CoverReport& r);
Json to_json(const CoverStats& s);
Json to_json(const Coloring& c);
Json to_json(const StageRecord& r);
Json to_json(const MvResult& r);
Json to_json(const ExtractionResult& r);
Json to_json(const PeelTrace& t);
Json to_json(const TraceAnalysis& a);
Json system_to_json(const BicliqueSystem& s);

// FNV-1a 64-bit, lowercase hex; used for input digests in run reports.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace bcc
