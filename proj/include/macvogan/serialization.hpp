#pragma once

#include <json.hpp>

#include "macvogan/multisegment.hpp"
#include "macvogan/partition_fn.hpp"
#include "macvogan/sl_correspondence.hpp"
#include "macvogan/tame_parameter.hpp"

namespace macvogan {

using json = nlohmann::json;

// Canonical JSON forms. Keys are emitted sorted (nlohmann's default object
// ordering); every file and stream form below is stable byte for byte.

inline json to_json(const PartitionFn& m) {
    json entries = json::array();
    for (const auto& [tau, lambda] : m.entries)
        entries.push_back({{"d", tau.d}, {"orbit", tau.orbit_rep}, {"partition", lambda.parts}});
    return {{"q", m.q}, {"entries", entries}};
}

inline PartitionFn partition_fn_from_json(const json& j) {
    auto field = FieldParams::make(j.at("q").get<int64_t>());
    std::vector<std::pair<CuspidalDatum, Partition>> entries;
    for (const auto& e : j.at("entries")) {
        auto tau = make_cuspidal(field, e.at("d").get<int64_t>(), e.at("orbit").get<int64_t>());
        if (tau.orbit_rep != e.at("orbit").get<int64_t>())
            throw domain_error("PartitionFn json: orbit index is not the minimal representative");
        entries.emplace_back(tau, Partition(e.at("partition").get<std::vector<int64_t>>()));
    }
    return PartitionFn::make(field, std::move(entries));
}

inline json to_json(const Multisegment& ms) {
    json segments = json::array();
    for (const auto& s : ms.segments)
        segments.push_back({{"d", s.tau.d}, {"orbit", s.tau.orbit_rep}, {"length", s.length}});
    return {{"q", ms.q}, {"segments", segments}};
}

inline Multisegment multisegment_from_json(const json& j) {
    auto field = FieldParams::make(j.at("q").get<int64_t>());
    std::vector<Segment> segments;
    for (const auto& e : j.at("segments"))
        segments.push_back(
            {make_cuspidal(field, e.at("d").get<int64_t>(), e.at("orbit").get<int64_t>()),
             e.at("length").get<int64_t>()});
    return Multisegment::make(field, std::move(segments));
}

inline json to_json(const TameParameter& p) {
    json blocks = json::array();
    for (const auto& blk : p.blocks)
        blocks.push_back({{"d", blk.tau.d},
                          {"orbit", blk.tau.orbit_rep},
                          {"u", blk.u.str()},
                          {"length", blk.length}});
    return {{"q", p.q}, {"N", p.n}, {"blocks", blocks}};
}

inline TameParameter tame_parameter_from_json(const json& j) {
    auto field = FieldParams::make(j.at("q").get<int64_t>());
    std::vector<TameSegmentParam> blocks;
    for (const auto& e : j.at("blocks"))
        blocks.push_back(
            {make_cuspidal(field, e.at("d").get<int64_t>(), e.at("orbit").get<int64_t>()),
             Phase::parse(e.at("u").get<std::string>()), e.at("length").get<int64_t>()});
    auto p = TameParameter::make(field, std::move(blocks));
    if (j.contains("N") && j.at("N").get<int64_t>() != p.n)
        throw domain_error("TameParameter json: declared N disagrees with the blocks");
    return p;
}

/// Census record for one class: representative, stabilizer order, and the
/// fiber as flat torsor indices in dual enumeration order.
inline json mv_class_record(const MVClass& c) {
    json fiber = json::array();
    int64_t index = 0;
    for (const auto& label : mv_fiber(c)) {
        (void)label;
        fiber.push_back(index++);
    }
    return {{"representative", to_json(c.representative)},
            {"stab_order", c.stab.order()},
            {"fiber", fiber}};
}

inline json sl_census_record(const FieldParams& field, int64_t n, int64_t budget = 2000000) {
    json classes = json::array();
    for (const auto& [rep, stab] : orbits_and_stabilizers(field, n, budget))
        classes.push_back(mv_class_record(MVClass{rep, stab}));
    return {{"q", field.q}, {"N", n}, {"classes", classes}};
}

} // namespace macvogan
