#pragma once

#include "clog/structure.hpp"
#include "clog/syntax.hpp"

#include <string>
#include <vector>

namespace clog {

// ∀x̄ ∃ȳ: α1; …; αm :- β1, …, βk, not γ1, …, not γn.
// x̄ are the variables of the positive body (order of first occurrence), ȳ the
// head variables absent from the body. m = 0 makes the rule a constraint.
struct EDisjRule
{
    std::vector<Atom> head;
    std::vector<Atom> positive;
    std::vector<Atom> negative;
    std::vector<std::string> universal;
    std::vector<std::string> existential;
    SourcePos pos;

    [[nodiscard]] bool is_constraint() const { return head.empty(); }
    // Disjunctive when ȳ is non-empty or m > 1.
    [[nodiscard]] bool is_disjunctive() const { return !existential.empty() || head.size() > 1; }

    bool operator==(const EDisjRule& other) const
    {
        return head == other.head && positive == other.positive && negative == other.negative;
    }
};

// Builds a rule and derives x̄/ȳ. Throws GuardError for unsafe rules (a
// negative-body variable missing from the positive body) and for rules with
// neither head nor body.
EDisjRule make_rule(std::vector<Atom> head, std::vector<Atom> positive, std::vector<Atom> negative,
                    SourcePos pos = {});

struct EDisjProgram
{
    std::vector<EDisjRule> rules;

    bool operator==(const EDisjProgram& other) const { return rules == other.rules; }
    [[nodiscard]] Vocabulary vocabulary() const;
    [[nodiscard]] std::set<std::string> head_predicates() const;
};

} // namespace clog
