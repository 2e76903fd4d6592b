#pragma once

#include "clog/cee.hpp"
#include "clog/structure.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clog {

inline constexpr int default_budget = 4;

// One instantiation of a CEE sub-node: the node's preorder id plus the values
// of the enclosing All/Sel/New variables, outermost first. Each fires at most
// once per process.
struct EventKey
{
    std::uint32_t node = 0;
    Tuple binding;

    auto operator<=>(const EventKey&) const = default;
};

struct Justification
{
    EventKey event;
    std::string label;
    // Conditions and qualifications on the path from the root, outermost first.
    std::vector<std::string> conditions;
};

struct CSet
{
    std::set<GroundAtom> caused;
    std::vector<ElementId> created;
    std::map<GroundAtom, std::vector<Justification>> causes;
    std::map<ElementId, Justification> creators;
};

struct FailedBranch
{
    EventKey event;
    std::string reason;
};

struct CSetEnumeration
{
    // The input structure extended with `budget` fresh created elements; only
    // those listed in a cset's `created` are part of that outcome.
    Structure world;
    std::vector<CSet> csets;
    // Branches where a fired Sel had no witness (distinct from the empty cset).
    std::vector<FailedBranch> failed;
    // Branches cut because they needed more than `budget` creations.
    std::size_t pruned = 0;
    int budget = default_budget;
};

struct FiredEvent
{
    EventKey key;
    std::string label;
};

struct TraceStep
{
    std::vector<FiredEvent> fired;
    std::vector<GroundAtom> new_atoms;
    std::vector<ElementId> new_elements;
    // Endogenous atoms and domain after this step.
    std::set<GroundAtom> atoms;
    std::vector<ElementId> domain;
};

struct ProcessTrace
{
    // Element names and the exogenous interpretation; may hold elements that
    // only exist from some step on.
    Structure world;
    std::vector<TraceStep> steps;
    bool truncated = false;
    // Forward runs only: result of re-checking the final state.
    std::optional<bool> accepted;
    std::string note;
    int budget = default_budget;

    // The structure reached at `step` (default: the last one).
    [[nodiscard]] Structure state(std::optional<std::size_t> step = std::nullopt) const;
};

struct ModelVerdict
{
    bool accepted = false;
    std::string reason;
    std::optional<CSet> cset;
    std::optional<ProcessTrace> trace;
};

struct ModelSet
{
    std::vector<Structure> models;
    // Some branch needed more than `budget` created elements.
    bool truncated = false;
    int budget = default_budget;
    std::size_t candidates = 0;
};

// `exo` extended with every endogenous predicate interpreted as empty and every
// theory constant present as an initial element.
Structure default_state(const Vocabulary& vocab, const Structure& exo, const std::set<std::string>& endogenous);

CSetEnumeration enumerate_csets(const CausalTheory& delta, const Structure& s, int budget = default_budget);

ModelVerdict check_model(const FOClogTheory& theory, const Structure& candidate, int budget = default_budget);
ModelVerdict check_model(const CausalTheory& theory, const Structure& candidate, int budget = default_budget);

ModelSet enumerate_models(const FOClogTheory& theory, const Structure& exo, int budget = default_budget);
ModelSet enumerate_models(const CausalTheory& theory, const Structure& exo, int budget = default_budget);

// Forward execution: every condition reads the current state; Or/Sel choices
// come from a generator seeded with `seed`.
ProcessTrace run_process(const FOClogTheory& theory, const Structure& exo, std::uint64_t seed,
                         int budget = default_budget);
ProcessTrace run_process(const CausalTheory& theory, const Structure& exo, std::uint64_t seed,
                         int budget = default_budget);

// Serial variant used to validate the round-based scheduling: fires one
// enabled event at a time in an order drawn from `seed`. Returns the final
// state, or nullopt when the budget was exceeded.
std::optional<Structure> run_serial(const FOClogTheory& theory, const Structure& exo, std::uint64_t seed,
                                    int budget = default_budget);

} // namespace clog
