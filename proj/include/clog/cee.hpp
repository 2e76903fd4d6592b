#pragma once

#include "clog/structure.hpp"
#include "clog/syntax.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clog {

struct Cee;
using CeePtr = std::shared_ptr<const Cee>;

// Causal effect expression. One constructor per kind:
//   atom    P(t..)
//   rule    children[0] <- condition
//   conj    children[0] And children[1]
//   disj    children[0] Or children[1]
//   all     All var : condition -> children[0]
//   sel     Sel var : condition -> children[0]
//   create  New var -> children[0]
struct Cee
{
    enum class Kind : std::uint8_t { atom, rule, conj, disj, all, sel, create };

    Kind kind = Kind::atom;
    Atom atom;
    FormulaPtr condition;
    std::string var;
    std::vector<CeePtr> children;
    SourcePos pos;

    [[nodiscard]] const Cee& child(std::size_t i) const { return *children.at(i); }
};

bool operator==(const Cee& a, const Cee& b);
bool same(const CeePtr& a, const CeePtr& b);

const char* kind_name(Cee::Kind kind);

namespace cee {

CeePtr atom(Atom a);
CeePtr rule(CeePtr head, FormulaPtr body);
CeePtr conj(CeePtr a, CeePtr b);
CeePtr disj(CeePtr a, CeePtr b);
CeePtr all(std::string var, FormulaPtr qualification, CeePtr body);
CeePtr sel(std::string var, FormulaPtr qualification, CeePtr body);
CeePtr create(std::string var, CeePtr body);

CeePtr with_pos(CeePtr c, SourcePos pos);

} // namespace cee

// A closed CEE. A null root is the neutral theory (empty And-conjunction).
struct CausalTheory
{
    CeePtr root;

    [[nodiscard]] bool empty() const { return !root; }
    bool operator==(const CausalTheory& other) const { return same(root, other.root); }
};

// Left-to-right And-fold of a list of CEEs.
CausalTheory and_fold(const std::vector<CeePtr>& parts);
// Inverse of and_fold along the left spine.
std::vector<CeePtr> and_unfold(const CausalTheory& theory);

struct FOClogTheory
{
    std::optional<CausalTheory> causal;
    std::vector<FormulaPtr> sentences;

    bool operator==(const FOClogTheory& other) const;
    [[nodiscard]] const CausalTheory& causal_part() const;
};

FOClogTheory as_foclog(CausalTheory theory);

struct SymbolClassification
{
    std::set<std::string> endogenous;
    std::set<std::string> exogenous;
};

// Endogenous = predicates of (possibly nested) atom-expressions; everything
// else in the theory's vocabulary is exogenous.
SymbolClassification classify_symbols(const CausalTheory& theory);
SymbolClassification classify_symbols(const FOClogTheory& theory);

Vocabulary vocabulary_of(const CausalTheory& theory);
Vocabulary vocabulary_of(const FOClogTheory& theory);

std::set<std::string> free_variables(const Cee& c);
bool is_creation_free(const CausalTheory& theory);

} // namespace clog
