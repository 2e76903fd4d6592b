#pragma once

#include "clog/cee.hpp"
#include "clog/program.hpp"
#include "clog/structure.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clog {

// Each rule with a head becomes `All x̄: body -> Sel ȳ: true -> (α1 Or … Or αm)`
// (a plain rule when x̄ is empty); constraints become `! x̄: ~(body)`, and every
// predicate that heads no rule gets `! x̄: ~P(x̄)`.
FOClogTheory translate_to_foclog(const EDisjProgram& p);

// All -> !, Sel -> ?, Or -> |, And -> &, `C <- f` -> `f => C`. Throws
// GuardError on New. The empty theory weakens to `true`.
FormulaPtr fo_weakening(const CausalTheory& delta);

// The weakening of the causal part conjoined with the FO sentences.
FormulaPtr fo_weakening(const FOClogTheory& theory);

struct OccurrenceWitness
{
    std::size_t rule = 0;
    std::size_t head_index = 0;
    // Values for the rule's variables, universal then existential.
    std::vector<std::pair<std::string, ElementId>> eta;
    GroundAtom atom;
};

struct AnalysisReport
{
    bool non_overlapping = true;
    // First occurrence lies in a disjunctive rule; the second is any other.
    std::optional<std::pair<OccurrenceWitness, OccurrenceWitness>> overlap;
    bool neg_recursion = false;
    // Predicate cycle through a negative edge, first == last.
    std::vector<std::string> cycle;
    std::set<std::string> head_symbols;
    std::set<std::string> never_in_head;
    // Element names for printing witnesses.
    Structure domain;
};

AnalysisReport analyze(const EDisjProgram& p, const Structure& domain);

// Re-checks a witness against the program: α_i η equals the stated atom.
bool verify_witness(const EDisjProgram& p, const Structure& domain, const OccurrenceWitness& w);

struct Counterexample
{
    std::string expectation;
    std::string detail;
    Structure witness;
};

struct ComparisonReport
{
    std::vector<Structure> stable;
    std::vector<Structure> foclog;
    std::vector<Structure> fo_weak;
    bool foclog_truncated = false;
    // fo_weak is skipped when the atom space exceeds the subset-enumeration limit.
    bool fo_weak_computed = false;
    int budget = 0;

    bool stable_subset_foclog = false;
    bool foclog_subset_stable = false;
    bool foclog_subset_fo_weak = false;
    [[nodiscard]] bool equal() const { return stable_subset_foclog && foclog_subset_stable; }

    // Which relations the program's shape promises.
    bool expect_equal = false;
    bool expect_stable_subset_foclog = false;
    bool expect_foclog_subset_fo_weak = true;

    std::vector<Counterexample> counterexamples;
    AnalysisReport analysis;
};

// Exogenous symbols of the translation are the never-in-head predicates; they
// are fixed to the empty relation, which their closure sentences demand.
ComparisonReport compare_semantics(const EDisjProgram& p, const Structure& domain, int budget = 0);

// Models of a closed formula over `base`, ranging over every subset of the
// domain atoms of `open` predicates; other predicates keep their extension.
std::vector<Structure> formula_models(const FormulaPtr& f, const Structure& base,
                                      const std::set<std::string>& open);

} // namespace clog
