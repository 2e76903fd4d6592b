#pragma once

#include "clog/error.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clog {

using ElementId = std::uint32_t;
using Tuple = std::vector<ElementId>;

// A domain element. Elements whose name is a decimal numeral belong to the
// integer segment and carry their value; `created` elements were invented by a
// New-expression, all others are initial.
struct Element
{
    std::string name;
    bool created = false;
    std::optional<std::int64_t> number;
};

struct GroundAtom
{
    std::string predicate;
    Tuple args;

    auto operator<=>(const GroundAtom&) const = default;
};

struct Vocabulary
{
    std::map<std::string, std::size_t> predicates;
    std::set<std::string> constants;

    // Throws StructuralError when `name` is already known with another arity.
    void add_predicate(const std::string& name, std::size_t arity);
    void merge(const Vocabulary& other);
    [[nodiscard]] bool has_predicate(const std::string& name) const { return predicates.contains(name); }
};

std::optional<std::int64_t> parse_numeral(std::string_view name);

// A finite structure. Element ids are dense indices into `elements()` and are
// stable for the lifetime of the structure, so output is canonical and
// diffable. A predicate is "interpreted" once declared, even with an empty
// extension.
class Structure
{
public:
    ElementId add_element(std::string name, bool created = false);
    ElementId ensure_element(const std::string& name);

    [[nodiscard]] const std::vector<Element>& elements() const { return _elements; }
    [[nodiscard]] const Element& element(ElementId id) const { return _elements.at(id); }
    [[nodiscard]] std::size_t size() const { return _elements.size(); }
    [[nodiscard]] std::optional<ElementId> find(std::string_view name) const;
    [[nodiscard]] std::optional<ElementId> find_number(std::int64_t value) const;
    [[nodiscard]] std::vector<ElementId> all_ids() const;
    [[nodiscard]] std::vector<ElementId> initial_ids() const;
    [[nodiscard]] std::vector<ElementId> created_ids() const;

    void declare(const std::string& predicate, std::size_t arity);
    [[nodiscard]] bool interprets(const std::string& predicate) const { return _arity.contains(predicate); }
    [[nodiscard]] std::optional<std::size_t> arity(const std::string& predicate) const;
    [[nodiscard]] bool holds(const std::string& predicate, const Tuple& args) const;
    [[nodiscard]] bool holds(const GroundAtom& a) const { return holds(a.predicate, a.args); }
    void insert(const std::string& predicate, Tuple args);
    void insert(const GroundAtom& a) { insert(a.predicate, a.args); }
    void clear(const std::string& predicate);
    void undeclare(const std::string& predicate);

    [[nodiscard]] const std::map<std::string, std::set<Tuple>>& relations() const { return _relations; }
    [[nodiscard]] const std::map<std::string, std::size_t>& arities() const { return _arity; }
    // All true atoms, sorted.
    [[nodiscard]] std::vector<GroundAtom> atoms() const;

    void bind_constant(const std::string& name, ElementId id);
    // Explicit binding if present, else the element of the same name.
    [[nodiscard]] std::optional<ElementId> constant(const std::string& name) const;
    [[nodiscard]] const std::map<std::string, ElementId>& constants() const { return _constants; }

    [[nodiscard]] std::string atom_text(const GroundAtom& a) const;
    [[nodiscard]] std::string atom_text(const std::string& predicate, const Tuple& args) const;

private:
    std::vector<Element> _elements;
    std::unordered_map<std::string, ElementId> _by_name;
    std::map<std::int64_t, ElementId> _by_number;
    std::map<std::string, std::set<Tuple>> _relations;
    std::map<std::string, std::size_t> _arity;
    std::map<std::string, ElementId> _constants;
};

// Variable bindings with scoping: later bindings shadow earlier ones.
class Assignment
{
public:
    void push(std::string var, ElementId value) { _slots.emplace_back(std::move(var), value); }
    void pop() { _slots.pop_back(); }
    [[nodiscard]] std::optional<ElementId> lookup(std::string_view var) const;
    [[nodiscard]] bool empty() const { return _slots.empty(); }
    [[nodiscard]] const std::vector<std::pair<std::string, ElementId>>& slots() const { return _slots; }

private:
    std::vector<std::pair<std::string, ElementId>> _slots;
};

} // namespace clog
