#pragma once

#include "clog/cee.hpp"
#include "clog/program.hpp"

#include <string_view>

namespace clog {

// .clog: a sequence of `.`-terminated CEEs, And-folded left to right.
//   cee     := cee "<-" formula | cee "Or" cee | cee "And" cee
//            | "All" vars ":" formula "->" cee | "Sel" vars ":" formula "->" cee
//            | "New" var "->" cee | "(" cee ")" | atom
// `<-` binds loosest, then `Or`, then `And`; binders extend as far right as
// possible. `All x, y: f -> C` abbreviates `All x: true -> All y: f -> C`.
//
// Identifiers in term position resolve to the innermost binder of that name;
// an unbound identifier is a constant when it starts with an upper-case letter
// and a free-variable error otherwise. Quoted strings are always constants.
CausalTheory parse_clog(std::string_view text);

// .foclog: an optional `{ … }` block of CEEs followed by `.`-terminated
// sentences.
FOClogTheory parse_foclog(std::string_view text);

// A single closed FO formula in the shared formula syntax.
FormulaPtr parse_formula(std::string_view text);

// .edlp: `h1 ; … ; hm :- b1, …, not c1, … .` with ASP term conventions
// (upper-case identifiers are variables). Head variables absent from the body
// are existential.
EDisjProgram parse_edlp(std::string_view text);

} // namespace clog
