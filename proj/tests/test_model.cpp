#include "ckm/model.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ckm;

namespace {

ClassInfo make_class(std::string name, SuperRef super = SuperRef::none()) {
    ClassInfo cls;
    cls.name = std::move(name);
    cls.superclass = std::move(super);
    return cls;
}

ClassModel model_of(std::vector<ClassInfo> classes) {
    ClassModel model;
    for (ClassInfo& cls : classes) {
        model.module_map[cls.name] = "m";
        model.classes.emplace(cls.name, std::move(cls));
    }
    return model;
}

} // namespace

TEST_CASE("well-formed model has no violations") {
    ClassModel model =
        model_of({make_class("A"), make_class("B", SuperRef::internal("A"))});
    CHECK(validate_model(model).empty());
}

TEST_CASE("self-inheritance is flagged") {
    ClassModel model = model_of({make_class("B", SuperRef::internal("B"))});
    auto violations = validate_model(model);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].class_name == "B");
    CHECK(violations[0].rule == "self-inheritance");
}

TEST_CASE("two-class inheritance cycle names both members") {
    ClassModel model = model_of({make_class("A", SuperRef::internal("B")),
                                 make_class("B", SuperRef::internal("A"))});
    auto violations = validate_model(model);
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].rule == "inheritance-cycle");
    CHECK(violations[1].rule == "inheritance-cycle");
}

TEST_CASE("duplicate fields, duplicate methods and foreign field uses") {
    ClassInfo cls = make_class("C");
    cls.fields = {{"x", "int"}, {"x", "long"}};
    MethodInfo m;
    m.name = "f";
    m.arity = 0;
    cls.methods = {m, m};
    MethodInfo bad;
    bad.name = "g";
    bad.field_uses = {"ghost"};
    cls.methods.push_back(bad);
    ClassModel model = model_of({cls});

    auto violations = validate_model(model);
    auto has_rule = [&](const std::string& rule) {
        return std::any_of(violations.begin(), violations.end(),
                           [&](const Violation& v) { return v.rule == rule; });
    };
    CHECK(has_rule("duplicate-field"));
    CHECK(has_rule("duplicate-method"));
    CHECK(has_rule("unknown-field-use"));
}

TEST_CASE("validation is insertion-order independent") {
    ClassInfo a = make_class("A", SuperRef::internal("B"));
    ClassInfo b = make_class("B", SuperRef::internal("A"));
    ClassInfo c = make_class("C", SuperRef::internal("C"));
    CHECK(validate_model(model_of({a, b, c})) == validate_model(model_of({c, b, a})));
}

TEST_CASE("dangling internal superclass is a violation") {
    ClassModel model = model_of({make_class("A", SuperRef::internal("Missing"))});
    auto violations = validate_model(model);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "dangling-superclass");
}
