#pragma once

#include "ckm/model.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace ckm {

// Class-model interchange document:
//
// {"classes":[{"name":..., "extends":..., "external":bool,
//              "implements":[...], "fields":[{"name","type"}],
//              "methods":[{"name","arity","params":[...],"returns":...,
//                          "constructor":bool,
//                          "calls":[{"recv","name","arity"}],
//                          "uses_fields":[...],"ref_types":[...]}]}],
//  "modules":{"ClassName":"ModuleName"}}
//
// "extends" is absent for root classes; "external" marks a declared parent
// that is not part of the model. save followed by load is the identity.
ClassModel load_model_file(const std::string& path);
void save_model_file(const ClassModel& model, const std::string& path);

ClassModel load_model_stream(std::istream& in, const std::string& origin);
void save_model_stream(const ClassModel& model, std::ostream& out);

// Two-column CSV "class,module" (header row optional).
std::map<std::string, std::string> load_module_map_csv(const std::string& path);

} // namespace ckm
