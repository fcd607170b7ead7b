#pragma once

#include "ckm/lexer.hpp"
#include "ckm/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace ckm {

// Parses one compilation unit of the source subset:
//
//   unit        := { class-decl }
//   class-decl  := "class" Name ["extends" Name] ["implements" Name {"," Name}]
//                  "{" { member } "}"
//   member      := Type Name ";"                      (field)
//                | Type Name "(" params ")" block     (method)
//                | ClassName "(" params ")" block     (constructor)
//
// Statements inside blocks are scanned, not parsed: the scanner extracts
// method invocations (recv.m(..), bare m(..), new T(..)), own-field
// reads/writes (this.f or a bare identifier naming a declared field) and
// local variable declarations, which establish receiver types. Receivers are
// resolved through declared (static) types only; anything else is recorded
// as unknown ("?name").
//
// Throws ParseError with file:line:column and the expected construct.
std::vector<ClassInfo> parse_unit(const std::vector<Token>& tokens,
                                  const std::string& file);

// Merges per-file class lists into one model, resolves superclass names to
// in-model classes or EXTERNAL, attaches the module map and validates.
// Throws DuplicateClass, InheritanceCycle or UnmappedClass.
ClassModel build_class_model(const std::vector<std::vector<ClassInfo>>& units,
                             const std::map<std::string, std::string>& module_map);

} // namespace ckm
