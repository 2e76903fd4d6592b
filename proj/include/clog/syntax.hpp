#pragma once

#include "clog/error.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace clog {

// A term is a variable, a constant symbol, an integer literal, or the sum of two
// terms. Integers and sums only make sense over the integer segment of a domain.
struct Term
{
    enum class Kind : std::uint8_t { variable, constant, integer, sum };

    Kind kind = Kind::constant;
    std::string name;
    std::int64_t value = 0;
    std::vector<Term> operands;

    static Term variable(std::string name);
    static Term constant(std::string name);
    static Term integer(std::int64_t value);
    static Term sum(Term lhs, Term rhs);

    bool operator==(const Term&) const = default;
};

struct Atom
{
    std::string predicate;
    std::vector<Term> args;

    bool operator==(const Atom&) const = default;
};

enum class CompareOp : std::uint8_t { eq, ne, lt, le, gt, ge };

const char* symbol(CompareOp op);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula
{
    enum class Kind : std::uint8_t {
        truth,
        falsity,
        atom,
        compare,
        negation,
        conjunction,
        disjunction,
        implication,
        equivalence,
        forall, // restricted: children = {qualification, assertion}
        exists,
    };

    Kind kind = Kind::truth;
    Atom atom;
    CompareOp op = CompareOp::eq;
    Term lhs;
    Term rhs;
    std::string var;
    std::vector<FormulaPtr> children;
    SourcePos pos;

    [[nodiscard]] const Formula& child(std::size_t i) const { return *children.at(i); }
    [[nodiscard]] bool is_quantifier() const { return kind == Kind::forall || kind == Kind::exists; }
};

// Structural equality; source positions are ignored.
bool operator==(const Formula& a, const Formula& b);
bool same(const FormulaPtr& a, const FormulaPtr& b);

namespace fo {

FormulaPtr top();
FormulaPtr bottom();
FormulaPtr atom(Atom a);
FormulaPtr compare(CompareOp op, Term lhs, Term rhs);
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string var, FormulaPtr qualification, FormulaPtr assertion);
FormulaPtr exists(std::string var, FormulaPtr qualification, FormulaPtr assertion);

// Left-folded conjunction; `true` for an empty list.
FormulaPtr conj_all(const std::vector<FormulaPtr>& parts);

FormulaPtr with_pos(FormulaPtr f, SourcePos pos);

} // namespace fo

void collect_variables(const Term& t, std::set<std::string>& out);
std::set<std::string> free_variables(const Formula& f);
void collect_predicates(const Formula& f, std::set<std::pair<std::string, std::size_t>>& out);
void collect_constants(const Term& t, std::set<std::string>& out);
void collect_constants(const Formula& f, std::set<std::string>& out);

// Rewrites restricted quantifiers into plain ones:
//   ! x [q]: a  ==>  ! x: q => a        ? x [q]: a  ==>  ? x: q & a
// A qualification of `true` is dropped instead of producing `true => a`.
FormulaPtr desugar(const FormulaPtr& f);

} // namespace clog
