#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ckm {

// One observed call site. `recv` is the receiver's declared type name when it
// could be resolved statically; unresolvable receivers are recorded as
// "?<identifier>" (or plain "?" when not even a name is available) so that
// distinct unknown receivers stay distinct for RFC counting.
struct CallSite {
    std::string recv;
    std::string name;
    int arity = 0;

    auto operator<=>(const CallSite&) const = default;
};

struct MethodInfo {
    std::string name;
    int arity = 0;
    std::vector<std::string> param_types;
    std::string return_type = "void";
    bool is_constructor = false;
    std::set<CallSite> invocations;
    std::set<std::string> field_uses;       // own-class fields read or written
    std::set<std::string> referenced_types; // type names in signature or body

    bool operator==(const MethodInfo&) const = default;
};

struct SuperRef {
    enum class Kind { None, Internal, External };
    Kind kind = Kind::None;
    std::string name; // empty iff kind == None

    static SuperRef none() { return {}; }
    static SuperRef internal(std::string n) { return {Kind::Internal, std::move(n)}; }
    static SuperRef external(std::string n) { return {Kind::External, std::move(n)}; }

    bool operator==(const SuperRef&) const = default;
};

struct FieldInfo {
    std::string name;
    std::string type;

    bool operator==(const FieldInfo&) const = default;
};

struct ClassInfo {
    std::string name;
    SuperRef superclass;
    std::set<std::string> interfaces;
    std::vector<FieldInfo> fields;
    std::vector<MethodInfo> methods;

    bool operator==(const ClassInfo&) const = default;
    bool declares_field(const std::string& field_name) const;
};

// Immutable after construction; all analysis runs as pure functions over it.
struct ClassModel {
    std::map<std::string, ClassInfo> classes;
    std::map<std::string, std::string> module_map; // class name -> module

    bool operator==(const ClassModel&) const = default;
};

struct Violation {
    std::string class_name;
    std::string rule;
    std::string detail;

    auto operator<=>(const Violation&) const = default;
};

// Returns the empty list iff every model invariant holds: unique class names
// are guaranteed by the map, so the checks cover self-inheritance, dangling
// internal superclass references, inheritance cycles, duplicate field names,
// duplicate (name, arity) method identities, arity/param consistency and
// field uses outside the declared field set.
std::vector<Violation> validate_model(const ClassModel& model);

// Per-module CK metric values (Table 4 row shape).
struct MetricsRow {
    std::string module;
    long long cbo = 0, dit = 0, lcom = 0, noc = 0, rfc = 0, wmc = 0;

    long long value(const std::string& metric) const;
    bool operator==(const MetricsRow&) const = default;
};

struct DefectRow {
    std::string module;
    long long defects = 0;
    double fix_hours = 0.0;

    bool operator==(const DefectRow&) const = default;
};

} // namespace ckm
