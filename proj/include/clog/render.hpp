#pragma once

#include "clog/cee.hpp"
#include "clog/program.hpp"

#include <string>

namespace clog {

// Canonical surface text. Parsing the output yields a structurally identical
// AST; redundant parentheses are never emitted.
std::string render(const CausalTheory& theory);
std::string render(const FOClogTheory& theory);
std::string render(const EDisjProgram& program);

std::string render(const Cee& c);
std::string render(const Formula& f);
std::string render(const EDisjRule& r);

// Term text under the scoped (.clog) convention with no variables in scope.
std::string render(const Term& t);

// `"..."` with backslash escapes.
std::string quote(const std::string& s);

} // namespace clog
