#pragma once

#include "ckm/model.hpp"

#include <string>
#include <vector>

namespace ckm {

struct ClassMetrics {
    std::string class_name;
    long long wmc = 0, dit = 0, noc = 0, cbo = 0, rfc = 0, lcom = 0;

    bool operator==(const ClassMetrics&) const = default;
};

// Count of declared methods, constructors included.
long long wmc(const ClassInfo& cls);

// Superclass edges from the class to its root; an EXTERNAL parent is the
// root, so a class extending an out-of-model class has depth 1.
// Requires a validated (acyclic) model.
long long dit(const ClassInfo& cls, const ClassModel& model);

// Immediate in-model subclasses only.
long long noc(const ClassInfo& cls, const ClassModel& model);

// Distinct other class names referenced through field types, signatures,
// receiver/local/constructed types, extends and implements. Self-references
// and primitive type names are excluded; external names count.
long long cbo(const ClassInfo& cls, const ClassModel& model);

// |own methods ∪ directly invoked methods|, one call level deep.
long long rfc(const ClassInfo& cls);

// max(P - Q, 0) over unordered method pairs, where P pairs have disjoint
// own-field-use sets and Q pairs intersect. Fewer than two methods yields 0.
long long lcom(const ClassInfo& cls);

ClassMetrics compute_class_metrics(const ClassInfo& cls, const ClassModel& model);

enum class AggRule { Sum, Max, MeanRounded };

struct AggregationPolicy {
    AggRule wmc = AggRule::Sum;
    AggRule dit = AggRule::Max;
    AggRule noc = AggRule::Sum;
    AggRule cbo = AggRule::Sum;
    AggRule rfc = AggRule::Sum;
    AggRule lcom = AggRule::Sum;
};

// One MetricsRow per module, sorted by module name. Throws UnmappedClass
// when a class has no module assignment, EmptyModule for a module with no
// classes.
std::vector<MetricsRow> aggregate_modules(const ClassModel& model,
                                          const AggregationPolicy& policy = {});

bool is_primitive_type(const std::string& name);

} // namespace ckm
