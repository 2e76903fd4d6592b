#pragma once

#include "clog/program.hpp"
#include "clog/structure.hpp"

#include <set>
#include <vector>

namespace clog {

inline constexpr std::size_t stable_atom_limit = 24;

struct Literal
{
    bool positive = true;
    GroundAtom atom;

    auto operator<=>(const Literal&) const = default;
};

using LiteralSet = std::set<Literal>;

// One instantiation η of a rule's universal variables. The head holds every
// θ-instance of every head atom, so "some α and some θ" becomes "some member".
struct GroundRule
{
    std::size_t rule = 0;
    Tuple eta;
    std::vector<GroundAtom> head;
    std::vector<GroundAtom> positive;
    std::vector<GroundAtom> negative;
};

// Grounds over all elements of `domain`. Throws GuardError for an empty domain
// with a non-empty program and for constants missing from the domain.
std::vector<GroundRule> ground_program(const EDisjProgram& p, const Structure& domain);

// {¬α | α a domain atom over m's predicates and elements, m ⊭ α}.
LiteralSet minus_set(const Structure& m);

// M is stable iff it satisfies the closure condition relative to X = M and no
// proper subset X does. Entailment of body(r)η by X ∪ M⁻: positive body atoms
// in X, negated body atoms false in M.
bool is_stable(const EDisjProgram& p, const Structure& m);

// All stable models over `domain` (elements only; the program's constants are
// added as needed), canonically ordered. Throws GuardError when more than
// stable_atom_limit atoms can be derived.
std::vector<Structure> stable_models(const EDisjProgram& p, const Structure& domain);

// A structure with the given initial elements.
Structure make_domain(const std::vector<std::string>& names);

} // namespace clog
