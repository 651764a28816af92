#pragma once

#include <string>

#include <json.hpp>

#include "yqc/layout.hpp"

namespace yqc {

namespace detail {

inline nlohmann::json instance_json(const GateInstance& inst) {
    nlohmann::json j;
    j["kind"] = inst.kind->name;
    j["value"] = inst.value ? nlohmann::json(inst.value->raw) : nlohmann::json(nullptr);
    nlohmann::json targets = nlohmann::json::array();
    for (const WireGroup& g : inst.targets) {
        nlohmann::json group;
        group["joint"] = g.joint;
        group["wires"] = g.wires;
        targets.push_back(std::move(group));
    }
    j["targets"] = std::move(targets);
    j["controls"] = inst.controls;
    j["neg_controls"] = inst.neg_controls;
    if (!inst.element_id.empty())
        j["name"] = inst.element_id;
    if (inst.sub) {
        nlohmann::json inner = nlohmann::json::array();
        for (const GateInstance& i : inst.sub->instances)
            inner.push_back(instance_json(i));
        j["subcircuit"] = std::move(inner);
    }
    return j;
}

inline nlohmann::json layout_json(const Layout& layout) {
    nlohmann::json j;

    nlohmann::json regs = nlohmann::json::array();
    for (std::size_t w = 0; w < layout.wire_names.size(); ++w) {
        nlohmann::json reg;
        reg["wire"] = w;
        reg["name"] = layout.wire_names[w].first;
        reg["index"] = layout.wire_names[w].second;
        reg["type"] = register_type_name(layout.declared_types[w]);
        regs.push_back(std::move(reg));
    }
    j["registers"] = std::move(regs);

    nlohmann::json instances = nlohmann::json::array();
    for (const GateInstance& inst : layout.instances)
        instances.push_back(instance_json(inst));
    j["instances"] = std::move(instances);

    nlohmann::json placements = nlohmann::json::array();
    for (const Placement& p : layout.placements) {
        nlohmann::json pj;
        pj["instance"] = p.instance;
        pj["x_center"] = p.x_center;
        pj["half_width"] = p.half_width;
        pj["wire_lo"] = p.wire_lo;
        pj["wire_hi"] = p.wire_hi;
        placements.push_back(std::move(pj));
    }
    j["placements"] = std::move(placements);
    return j;
}

} // namespace detail

/// Stable machine-readable dump of registers, instances, and placements.
/// Keys are emitted sorted; the schema carries a version number.
inline std::string dump_ir(const Layout& layout) {
    nlohmann::json j = detail::layout_json(layout);
    j["version"] = 1;
    return j.dump(2) + "\n";
}

/// Group files dump one entry per member circuit.
inline std::string dump_ir_group(const std::vector<Layout>& members) {
    nlohmann::json j;
    j["version"] = 1;
    nlohmann::json circuits = nlohmann::json::array();
    for (const Layout& member : members)
        circuits.push_back(detail::layout_json(member));
    j["circuits"] = std::move(circuits);
    return j.dump(2) + "\n";
}

} // namespace yqc
