#pragma once

#include "clog/structure.hpp"
#include "clog/syntax.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>

namespace clog {

enum class Truth : std::uint8_t { no, yes, unknown };

// Routes reads of endogenous atoms. `positive` tells whether the occurrence is
// under an even number of negations (antecedents of => count as negations).
class AtomReader
{
public:
    virtual ~AtomReader() = default;
    [[nodiscard]] virtual Truth read(const GroundAtom& atom, bool positive) const = 0;
};

struct EvalContext
{
    // Element metadata, constants and the extension of every predicate not
    // listed in `endogenous` (or of every predicate when `reader` is null).
    const Structure& world;
    const std::set<std::string>* endogenous = nullptr;
    const AtomReader* reader = nullptr;
    // Range of quantified variables.
    std::span<const ElementId> domain;
};

// Kleene three-valued result. When `value` is unknown, `open_atom` names an
// endogenous atom whose reading would make progress towards a definite value.
struct Verdict
{
    Truth value = Truth::no;
    std::optional<GroundAtom> open_atom;
};

struct TermValue
{
    std::optional<ElementId> element;
    std::optional<std::int64_t> number;

    // Defined iff the value is a domain element; `number` alone only feeds sums.
    [[nodiscard]] bool defined() const { return element.has_value(); }
};

TermValue evaluate_term(const Term& t, const Structure& world, const Assignment& env);

// Grounds an atom; nullopt when an argument is undefined (e.g. a sum that
// leaves the integer segment).
std::optional<GroundAtom> ground_atom(const Atom& a, const Structure& world, const Assignment& env);

Verdict evaluate(const Formula& f, const EvalContext& ctx, Assignment& env);

// Two-valued Tarskian satisfaction in `s`, quantifiers ranging over the whole
// domain. Throws EvaluationError for unbound variables and StructuralError for
// arity mismatches.
bool evaluate_formula(const Formula& f, const Structure& s, const Assignment& env = {});

} // namespace clog
