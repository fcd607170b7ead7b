#include "ckm/metrics.hpp"

#include "ckm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

namespace ckm {

bool is_primitive_type(const std::string& name) {
    static const std::set<std::string> primitives = {
        "int", "long", "short", "byte", "char", "float", "double", "boolean", "void",
    };
    return primitives.count(name) > 0;
}

long long wmc(const ClassInfo& cls) {
    return static_cast<long long>(cls.methods.size());
}

long long dit(const ClassInfo& cls, const ClassModel& model) {
    long long depth = 0;
    const ClassInfo* cur = &cls;
    for (;;) {
        switch (cur->superclass.kind) {
        case SuperRef::Kind::None:
            return depth;
        case SuperRef::Kind::External:
            return depth + 1;
        case SuperRef::Kind::Internal: {
            auto it = model.classes.find(cur->superclass.name);
            if (it == model.classes.end()) return depth + 1;
            cur = &it->second;
            ++depth;
        }
        }
    }
}

long long noc(const ClassInfo& cls, const ClassModel& model) {
    long long count = 0;
    for (const auto& [name, other] : model.classes)
        if (other.superclass.kind == SuperRef::Kind::Internal &&
            other.superclass.name == cls.name)
            ++count;
    return count;
}

long long cbo(const ClassInfo& cls, const ClassModel& model) {
    (void)model; // fan-out only; no global pass needed
    std::set<std::string> referenced;
    if (cls.superclass.kind != SuperRef::Kind::None)
        referenced.insert(cls.superclass.name);
    referenced.insert(cls.interfaces.begin(), cls.interfaces.end());
    for (const FieldInfo& f : cls.fields)
        referenced.insert(f.type);
    for (const MethodInfo& m : cls.methods) {
        referenced.insert(m.return_type);
        referenced.insert(m.param_types.begin(), m.param_types.end());
        referenced.insert(m.referenced_types.begin(), m.referenced_types.end());
        for (const CallSite& c : m.invocations)
            if (!c.recv.empty() && c.recv[0] != '?')
                referenced.insert(c.recv);
    }
    referenced.erase(cls.name);
    return std::count_if(referenced.begin(), referenced.end(),
                         [](const std::string& t) { return !is_primitive_type(t); });
}

long long rfc(const ClassInfo& cls) {
    std::set<std::tuple<std::string, std::string, int>> response_set;
    for (const MethodInfo& m : cls.methods) {
        response_set.insert({cls.name, m.name, m.arity});
        for (const CallSite& c : m.invocations)
            response_set.insert({c.recv, c.name, c.arity});
    }
    return static_cast<long long>(response_set.size());
}

long long lcom(const ClassInfo& cls) {
    const auto& ms = cls.methods;
    long long disjoint = 0, shared = 0;
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) {
            bool intersects = std::any_of(
                ms[i].field_uses.begin(), ms[i].field_uses.end(),
                [&](const std::string& f) { return ms[j].field_uses.count(f); });
            (intersects ? shared : disjoint) += 1;
        }
    return std::max<long long>(disjoint - shared, 0);
}

ClassMetrics compute_class_metrics(const ClassInfo& cls, const ClassModel& model) {
    return {cls.name, wmc(cls),  dit(cls, model), noc(cls, model),
            cbo(cls, model), rfc(cls), lcom(cls)};
}

namespace {

long long aggregate(const std::vector<long long>& values, AggRule rule) {
    switch (rule) {
    case AggRule::Sum:
        return std::accumulate(values.begin(), values.end(), 0LL);
    case AggRule::Max:
        return *std::max_element(values.begin(), values.end());
    case AggRule::MeanRounded: {
        double sum = static_cast<double>(
            std::accumulate(values.begin(), values.end(), 0LL));
        return std::llround(sum / static_cast<double>(values.size()));
    }
    }
    return 0;
}

} // namespace

std::vector<MetricsRow> aggregate_modules(const ClassModel& model,
                                          const AggregationPolicy& policy) {
    std::map<std::string, std::vector<ClassMetrics>> by_module;
    for (const auto& [name, cls] : model.classes) {
        auto it = model.module_map.find(name);
        if (it == model.module_map.end()) throw UnmappedClass(name);
        by_module[it->second].push_back(compute_class_metrics(cls, model));
    }

    std::vector<MetricsRow> rows;
    for (const auto& [module, metrics] : by_module) {
        if (metrics.empty()) throw EmptyModule(module);
        auto column = [&](long long ClassMetrics::* field) {
            std::vector<long long> v;
            v.reserve(metrics.size());
            for (const ClassMetrics& cm : metrics) v.push_back(cm.*field);
            return v;
        };
        MetricsRow row;
        row.module = module;
        row.wmc = aggregate(column(&ClassMetrics::wmc), policy.wmc);
        row.dit = aggregate(column(&ClassMetrics::dit), policy.dit);
        row.noc = aggregate(column(&ClassMetrics::noc), policy.noc);
        row.cbo = aggregate(column(&ClassMetrics::cbo), policy.cbo);
        row.rfc = aggregate(column(&ClassMetrics::rfc), policy.rfc);
        row.lcom = aggregate(column(&ClassMetrics::lcom), policy.lcom);
        rows.push_back(std::move(row));
    }
    return rows; // map iteration already sorts by module name
}

} // namespace ckm
