#include "ckm/model.hpp"

#include <algorithm>
#include <functional>

namespace ckm {

bool ClassInfo::declares_field(const std::string& field_name) const {
    return std::any_of(fields.begin(), fields.end(),
                       [&](const FieldInfo& f) { return f.name == field_name; });
}

long long MetricsRow::value(const std::string& metric) const {
    if (metric == "cbo") return cbo;
    if (metric == "dit") return dit;
    if (metric == "lcom") return lcom;
    if (metric == "noc") return noc;
    if (metric == "rfc") return rfc;
    if (metric == "wmc") return wmc;
    return 0;
}

namespace {

// Collects every class that sits on a superclass cycle of length two or
// more. Length-one loops are reported as self-inheritance instead. Classes
// are visited in map order, so the violation set is insertion-order
// independent.
std::set<std::string> find_cycle_members(const ClassModel& model) {
    std::set<std::string> in_cycle;
    for (const auto& [name, cls] : model.classes) {
        std::vector<std::string> chain;
        std::set<std::string> seen;
        const ClassInfo* cur = &cls;
        while (cur->superclass.kind == SuperRef::Kind::Internal) {
            if (!seen.insert(cur->name).second) {
                // keep only the loop itself, not the tail leading into it
                auto loop_start =
                    std::find(chain.begin(), chain.end(), cur->name);
                if (chain.end() - loop_start >= 2)
                    in_cycle.insert(loop_start, chain.end());
                break;
            }
            chain.push_back(cur->name);
            auto it = model.classes.find(cur->superclass.name);
            if (it == model.classes.end()) break;
            cur = &it->second;
        }
    }
    return in_cycle;
}

} // namespace

std::vector<Violation> validate_model(const ClassModel& model) {
    std::set<Violation> out;

    for (const auto& [name, cls] : model.classes) {
        if (cls.name != name)
            out.insert({name, "key-mismatch", "map key differs from class name " + cls.name});

        if (cls.superclass.kind != SuperRef::Kind::None && cls.superclass.name == name)
            out.insert({name, "self-inheritance", "class names itself as superclass"});

        if (cls.superclass.kind == SuperRef::Kind::Internal &&
            !model.classes.count(cls.superclass.name))
            out.insert({name, "dangling-superclass",
                        "internal superclass " + cls.superclass.name +
                            " not in model (should be EXTERNAL)"});

        std::set<std::string> field_names;
        for (const FieldInfo& f : cls.fields)
            if (!field_names.insert(f.name).second)
                out.insert({name, "duplicate-field", f.name});

        std::set<std::pair<std::string, int>> method_ids;
        for (const MethodInfo& m : cls.methods) {
            if (!method_ids.insert({m.name, m.arity}).second)
                out.insert({name, "duplicate-method",
                            m.name + "/" + std::to_string(m.arity)});
            if (m.arity != static_cast<int>(m.param_types.size()))
                out.insert({name, "arity-mismatch", m.name});
            for (const std::string& f : m.field_uses)
                if (!field_names.count(f))
                    out.insert({name, "unknown-field-use", m.name + " uses " + f});
        }
    }

    for (const std::string& member : find_cycle_members(model))
        out.insert({member, "inheritance-cycle", "superclass chain revisits " + member});

    return {out.begin(), out.end()};
}

} // namespace ckm
