#include "ckm/model_io.hpp"

#include "ckm/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ckm {

using nlohmann::json;

namespace {

json method_to_json(const MethodInfo& m) {
    json calls = json::array();
    for (const CallSite& c : m.invocations)
        calls.push_back({{"recv", c.recv}, {"name", c.name}, {"arity", c.arity}});
    return {
        {"name", m.name},
        {"arity", m.arity},
        {"params", m.param_types},
        {"returns", m.return_type},
        {"constructor", m.is_constructor},
        {"calls", calls},
        {"uses_fields", m.field_uses},
        {"ref_types", m.referenced_types},
    };
}

MethodInfo method_from_json(const json& j, const std::string& where) {
    MethodInfo m;
    try {
        m.name = j.at("name").get<std::string>();
        m.arity = j.at("arity").get<int>();
        m.param_types = j.at("params").get<std::vector<std::string>>();
        m.return_type = j.at("returns").get<std::string>();
        m.is_constructor = j.at("constructor").get<bool>();
        for (const json& c : j.at("calls"))
            m.invocations.insert({c.at("recv").get<std::string>(),
                                  c.at("name").get<std::string>(),
                                  c.at("arity").get<int>()});
        m.field_uses = j.at("uses_fields").get<std::set<std::string>>();
        m.referenced_types = j.at("ref_types").get<std::set<std::string>>();
    } catch (const json::exception& e) {
        throw SchemaError(where + ": " + e.what());
    }
    if (m.arity != static_cast<int>(m.param_types.size()))
        throw SchemaError(where + "." + m.name + ": arity does not match params");
    return m;
}

} // namespace

void save_model_stream(const ClassModel& model, std::ostream& out) {
    json classes = json::array();
    for (const auto& [name, cls] : model.classes) {
        json jc;
        jc["name"] = name;
        if (cls.superclass.kind != SuperRef::Kind::None) {
            jc["extends"] = cls.superclass.name;
            jc["external"] = cls.superclass.kind == SuperRef::Kind::External;
        }
        jc["implements"] = cls.interfaces;
        json fields = json::array();
        for (const FieldInfo& f : cls.fields)
            fields.push_back({{"name", f.name}, {"type", f.type}});
        jc["fields"] = fields;
        json methods = json::array();
        for (const MethodInfo& m : cls.methods)
            methods.push_back(method_to_json(m));
        jc["methods"] = methods;
        classes.push_back(std::move(jc));
    }
    json doc = {{"classes", classes}, {"modules", model.module_map}};
    out << doc.dump(2) << "\n";
}

ClassModel load_model_stream(std::istream& in, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError(origin + ": not valid JSON: " + e.what());
    }
    if (!doc.contains("classes"))
        throw SchemaError(origin + ": missing \"classes\" key");
    if (!doc.contains("modules"))
        throw SchemaError(origin + ": missing \"modules\" key");

    ClassModel model;
    try {
        for (const json& jc : doc["classes"]) {
            ClassInfo cls;
            cls.name = jc.at("name").get<std::string>();
            if (jc.contains("extends")) {
                std::string parent = jc.at("extends").get<std::string>();
                bool external = jc.value("external", false);
                cls.superclass = external ? SuperRef::external(parent)
                                          : SuperRef::internal(parent);
            }
            cls.interfaces = jc.at("implements").get<std::set<std::string>>();
            for (const json& jf : jc.at("fields"))
                cls.fields.push_back({jf.at("name").get<std::string>(),
                                      jf.at("type").get<std::string>()});
            for (const json& jm : jc.at("methods"))
                cls.methods.push_back(method_from_json(jm, origin + "/" + cls.name));
            if (!model.classes.emplace(cls.name, cls).second)
                throw SchemaError(origin + ": duplicate class " + cls.name);
        }
        model.module_map =
            doc["modules"].get<std::map<std::string, std::string>>();
    } catch (const json::exception& e) {
        throw SchemaError(origin + ": " + e.what());
    }

    std::vector<Violation> violations = validate_model(model);
    if (!violations.empty()) {
        const Violation& v = violations.front();
        throw SchemaError(origin + ": " + v.class_name + ": " + v.rule + ": " + v.detail);
    }
    return model;
}

ClassModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return load_model_stream(in, path);
}

void save_model_file(const ClassModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    save_model_stream(model, out);
}

std::map<std::string, std::string> load_module_map_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::map<std::string, std::string> map;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line == "class,module") { first = false; continue; }
        first = false;
        auto comma = line.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == line.size())
            throw SchemaError(path + ": expected 'class,module' row, got '" + line + "'");
        map[line.substr(0, comma)] = line.substr(comma + 1);
    }
    return map;
}

} // namespace ckm
