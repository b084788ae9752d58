#include "bcc/json_report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace bcc {

Json to_json(const Dyadic& d) {
    return Json{{"num", d.numerator().str()}, {"exp", d.exponent()}};
}

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const VertexSet& s) {
    Json a = Json::array();
    s.for_each([&](int v) { a.push_back(v); });
    return a;
}

Json to_json(const PartitionReport& r) {
    Json j;
    j["partition"] = r.is_partition;
    if (!r.is_partition) {
        j["witness_edge"] = to_json(r.witness);
        j["bicliques"] = Json::array({r.biclique_a + 1, r.biclique_b + 1});
    }
    return j;
}

Json to_json(const CoverReport& r) {
    Json j;
    j["cover"] = r.covers;
    if (r.uncovered) j["uncovered_edge"] = to_json(*r.uncovered);
    if (r.stray) {
        j["stray_edge"] = to_json(*r.stray);
        j["stray_biclique"] = r.stray_biclique + 1;
    }
    return j;
}

Json to_json(const CoverStats& s) {
    Json j;
    j["weight"] = s.weight;
    j["degrees"] = s.degrees;
    return j;
}

Json to_json(const Coloring& c) {
    Json j;
    j["distinct_colors"] = c.distinct_colors;
    Json a = Json::array();
    for (const ColorSequence& seq : c.assignment) a.push_back(seq);
    j["assignment"] = a;
    return j;
}

Json to_json(const StageRecord& r) {
    Json j;
    j["stage"] = r.stage;
    Json groups = Json::array();
    for (const StageGroupRecord& g : r.groups)
        groups.push_back(Json{
            {"prefix", g.prefix}, {"s_set_size", g.s_set_size}, {"cutting", g.cutting_size}});
    j["groups"] = groups;
    return j;
}

Json to_json(const MvResult& r) {
    Json j;
    j["m"] = r.m;
    j["coloring"] = to_json(r.coloring);
    Json stages = Json::array();
    for (const StageRecord& s : r.stages) stages.push_back(to_json(s));
    j["stages"] = stages;
    return j;
}

Json to_json(const ExtractionResult& r) {
    Json j;
    j["survivors"] = to_json(r.survivors);
    j["count"] = r.survivors.size();
    j["guarantee"] = to_json(r.guarantee);
    j["guarantee_ceil"] = r.guarantee.ceil().str();
    return j;
}

Json to_json(const PeelTrace& t) {
    Json j;
    Json rounds = Json::array();
    for (const PeelRound& r : t.rounds)
        rounds.push_back(Json{{"n", r.n_vertices},
                              {"weight", r.weight},
                              {"extracted", to_json(r.extracted)},
                              {"guarantee", to_json(r.guarantee)}});
    j["rounds"] = rounds;
    j["beta"] = t.beta;
    j["p"] = t.p;
    j["t"] = t.t;
    j["final_vertices"] = to_json(t.final_vertices);
    j["n"] = t.initial_n;
    j["k"] = t.k;
    return j;
}

Json to_json(const TraceAnalysis& a) {
    Json j;
    j["beta"] = a.beta;
    j["p"] = a.p;
    j["t"] = a.t;
    j["log2_n_over_k"] = a.log_ratio;
    j["t_bound_holds"] = a.t_bound_holds;
    j["case"] = a.case_one ? 1 : 2;
    j["case_threshold"] = a.case_threshold;
    if (a.case1_lhs) j["case1_lhs"] = *a.case1_lhs;
    if (a.theorem3)
        j["theorem3_bound"] = *a.theorem3;
    else
        j["theorem3_bound"] = nullptr;
    j["initial_weight"] = a.initial_weight;
    return j;
}

Json system_to_json(const BicliqueSystem& s) {
    Json a = Json::array();
    for (const Biclique& b : s.bicliques())
        a.push_back(Json{{"left", to_json(b.left)}, {"right", to_json(b.right)}});
    return Json{{"n", s.universe()}, {"bicliques", a}};
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace bcc
