#include "clog/engine.hpp"

#include "clog/canonical.hpp"
#include "clog/evaluate.hpp"
#include "clog/render.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace clog {

namespace {

// --- theory index ------------------------------------------------------------

struct Node
{
    const Cee* cee = nullptr;
    std::vector<std::uint32_t> children;
    std::int64_t parent = -1;
    // Variables of the enclosing All/Sel/New binders, outermost first.
    std::vector<std::string> binders;
    // Conditions on the path from the root, outermost first.
    std::vector<std::string> conditions;
};

class TheoryIndex
{
public:
    explicit TheoryIndex(const CausalTheory& theory)
    {
        if (theory.root)
            add(*theory.root, -1, {}, {});
        endogenous = classify_symbols(theory).endogenous;
        for (const auto& n : nodes)
            has_new = has_new || n.cee->kind == Cee::Kind::create;
    }

    std::vector<Node> nodes;
    std::set<std::string> endogenous;
    bool has_new = false;

    [[nodiscard]] bool empty() const { return nodes.empty(); }
    [[nodiscard]] const Cee& cee(std::uint32_t id) const { return *nodes[id].cee; }

    [[nodiscard]] std::string label(const EventKey& key, const Structure& world) const
    {
        const Node& n = nodes[key.node];
        std::string out = std::string(kind_name(n.cee->kind)) + "#" + std::to_string(key.node);
        if (!key.binding.empty()) {
            out += "[";
            for (std::size_t i = 0; i < key.binding.size(); ++i) {
                out += i ? ", " : "";
                out += (i < n.binders.size() ? n.binders[i] : "?") + "=" + element_name(world, key.binding[i]);
            }
            out += "]";
        }
        return out;
    }

    static std::string element_name(const Structure& world, ElementId id)
    {
        return id < world.size() ? world.element(id).name : "#" + std::to_string(id);
    }

private:
    std::uint32_t add(const Cee& c, std::int64_t parent, std::vector<std::string> binders,
                      std::vector<std::string> conditions)
    {
        auto id = static_cast<std::uint32_t>(nodes.size());
        nodes.push_back(Node{&c, {}, parent, binders, conditions});
        switch (c.kind) {
        case Cee::Kind::rule:
            conditions.push_back("if " + render(*c.condition));
            break;
        case Cee::Kind::all:
        case Cee::Kind::sel:
            conditions.push_back(std::string(kind_name(c.kind)) + " " + c.var + ": " + render(*c.condition));
            binders.push_back(c.var);
            break;
        case Cee::Kind::create:
            conditions.push_back("New " + c.var);
            binders.push_back(c.var);
            break;
        default:
            break;
        }
        for (const auto& child : c.children) {
            auto cid = add(*child, id, binders, conditions);
            nodes[id].children.push_back(cid);
        }
        return id;
    }
};

Tuple values(const Assignment& env)
{
    Tuple t;
    t.reserve(env.slots().size());
    for (const auto& [var, id] : env.slots())
        t.push_back(id);
    return t;
}

std::set<GroundAtom> endogenous_atoms(const Structure& s, const std::set<std::string>& endogenous)
{
    std::set<GroundAtom> out;
    for (const auto& [pred, tuples] : s.relations())
        if (endogenous.contains(pred))
            for (const auto& t : tuples)
                out.insert(GroundAtom{pred, t});
    return out;
}

// Declares every vocabulary predicate (empty when absent) and adds missing
// theory constants as initial elements.
void complete_structure(Structure& s, const Vocabulary& vocab)
{
    for (const auto& [pred, arity] : vocab.predicates)
        s.declare(pred, arity);
    for (const auto& c : vocab.constants)
        if (!s.constant(c))
            s.add_element(c);
}

std::string fresh_name(const Structure& world, std::size_t& counter)
{
    std::string name;
    do
        name = "_n" + std::to_string(++counter);
    while (world.find(name));
    return name;
}

// --- control flow --------------------------------------------------------------

struct Pruned
{
    std::string reason;
    bool budget = false;
};

struct Reject
{
    std::string reason;
};

struct Choices
{
    std::map<EventKey, int> disj;
    std::map<EventKey, ElementId> sel;
    std::map<EventKey, ElementId> created;
};

// --- rounds -----------------------------------------------------------------------

struct ProcessState
{
    std::set<GroundAtom> snapshot;
    std::set<GroundAtom> next;
    std::vector<ElementId> domain;
    std::vector<ElementId> next_domain;
};

class Policy
{
public:
    virtual ~Policy() = default;

    // Endogenous atom reads; `positive` per the evaluator's polarity.
    virtual Truth read(const GroundAtom& atom, bool positive) = 0;
    // Called when a condition stays undecided on `atom`; must make the next
    // read of `atom` definite.
    virtual void resolve(const GroundAtom& atom) { throw Pruned{"undecided read of " + atom.predicate}; }
    virtual int choose_or(const EventKey& key) = 0;
    // nullopt: the Sel waits this round.
    virtual std::optional<ElementId> choose_sel(const EventKey& key, const std::vector<ElementId>& valid) = 0;
    virtual ElementId choose_new(const EventKey& key) = 0;
    virtual void admit(const EventKey&) {}
    virtual void on_cause(const GroundAtom&) {}

    const ProcessState* state = nullptr;
};

class PolicyReader : public AtomReader
{
public:
    explicit PolicyReader(Policy& policy) : _policy(policy) {}
    Truth read(const GroundAtom& atom, bool positive) const override { return _policy.read(atom, positive); }

private:
    Policy& _policy;
};

// Executes a theory in rounds. Each round walks the whole tree against the
// snapshot S_k; newly reached events fire, their effects land in S_{k+1}.
// Activation is sticky, choices are made once per event, and elements created
// in a round join the quantifier domain in the next one.
class Run
{
public:
    Run(const TheoryIndex& index, Structure& world, Policy& policy, std::vector<ElementId> initial)
        : _index(index), _world(world), _policy(policy), _reader(policy)
    {
        _state.domain = std::move(initial);
        _policy.state = &_state;
    }

    void execute()
    {
        push_initial();
        for (;;) {
            begin_round();
            if (!_index.empty()) {
                Assignment env;
                walk(0, env);
            }
            if (!end_round())
                break;
        }
    }

    // One effect per step, drawn from `rng` among the enabled ones.
    void execute_serial(std::mt19937_64& rng)
    {
        push_initial();
        for (;;) {
            begin_round();
            _frontier.clear();
            _collect = true;
            if (!_index.empty()) {
                Assignment env;
                walk(0, env);
            }
            _collect = false;
            if (_frontier.empty()) {
                end_round();
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, _frontier.size() - 1);
            auto [id, env] = _frontier[pick(rng)];
            walk(id, env);
            end_round();
        }
    }

    [[nodiscard]] const std::set<GroundAtom>& atoms() const { return _state.snapshot; }
    [[nodiscard]] const std::vector<ElementId>& domain() const { return _state.domain; }
    [[nodiscard]] const std::set<EventKey>& reached() const { return _reached; }
    [[nodiscard]] std::vector<TraceStep>& steps() { return _steps; }

private:
    void push_initial()
    {
        TraceStep initial;
        initial.domain = _state.domain;
        _steps.push_back(std::move(initial));
    }

    void begin_round()
    {
        _state.next = _state.snapshot;
        _state.next_domain = _state.domain;
        _fired.clear();
        _new_atoms.clear();
        _new_elements.clear();
    }

    // Returns false when the round left the state unchanged; its events are
    // then merged into the previous step.
    bool end_round()
    {
        if (_new_atoms.empty() && _new_elements.empty()) {
            auto& last = _steps.back().fired;
            last.insert(last.end(), _fired.begin(), _fired.end());
            return false;
        }
        _state.snapshot = _state.next;
        _state.domain = _state.next_domain;
        TraceStep step;
        step.fired = std::move(_fired);
        step.new_atoms = std::move(_new_atoms);
        step.new_elements = std::move(_new_elements);
        step.atoms = _state.snapshot;
        step.domain = _state.domain;
        _steps.push_back(std::move(step));
        return true;
    }

    bool condition(const Formula& f, Assignment& env)
    {
        EvalContext ctx{_world, &_index.endogenous, &_reader, _state.domain};
        for (;;) {
            auto v = evaluate(f, ctx, env);
            if (v.value != Truth::unknown)
                return v.value == Truth::yes;
            if (!v.open_atom)
                throw Pruned{"undecided condition"};
            _policy.resolve(*v.open_atom);
        }
    }

    void record(const EventKey& key, const std::string& effect)
    {
        _fired.push_back(FiredEvent{key, _index.label(key, _world) + (effect.empty() ? "" : " " + effect)});
    }

    void walk(std::uint32_t id, Assignment& env)
    {
        const Node& node = _index.nodes[id];
        const Cee& c = *node.cee;
        EventKey key{id, values(env)};
        bool fresh = !_reached.contains(key);
        if (fresh) {
            if (_collect && (c.kind == Cee::Kind::atom || c.kind == Cee::Kind::create)) {
                _frontier.emplace_back(id, env);
                return;
            }
            _reached.insert(key);
            _policy.admit(key);
        }
        switch (c.kind) {
        case Cee::Kind::atom: {
            if (!fresh)
                return;
            auto g = ground_atom(c.atom, _world, env);
            if (!g)
                throw Pruned{"undefined term in caused atom " + render(c)};
            _policy.on_cause(*g);
            record(key, "causes " + _world.atom_text(*g));
            if (!_state.snapshot.contains(*g) && _state.next.insert(*g).second)
                _new_atoms.push_back(*g);
            return;
        }
        case Cee::Kind::conj:
            walk(node.children[0], env);
            walk(node.children[1], env);
            return;
        case Cee::Kind::disj: {
            int k;
            if (auto it = _or.find(key); it != _or.end()) {
                k = it->second;
            } else {
                k = _policy.choose_or(key);
                _or.emplace(key, k);
                record(key, k == 0 ? "takes left" : "takes right");
            }
            walk(node.children[static_cast<std::size_t>(k)], env);
            return;
        }
        case Cee::Kind::rule: {
            bool active = _active.contains(key);
            if (!active && condition(*c.condition, env)) {
                _active.insert(key);
                active = true;
                record(key, "fires");
            }
            if (active)
                walk(node.children[0], env);
            return;
        }
        case Cee::Kind::all: {
            auto domain = _state.domain;
            for (ElementId e : domain) {
                env.push(c.var, e);
                EventKey body{node.children[0], values(env)};
                if (_reached.contains(body) || condition(*c.condition, env))
                    walk(node.children[0], env);
                env.pop();
            }
            return;
        }
        case Cee::Kind::sel: {
            ElementId w;
            if (auto it = _sel.find(key); it != _sel.end()) {
                w = it->second;
            } else {
                std::vector<ElementId> valid;
                auto domain = _state.domain;
                for (ElementId e : domain) {
                    env.push(c.var, e);
                    if (condition(*c.condition, env))
                        valid.push_back(e);
                    env.pop();
                }
                auto pick = _policy.choose_sel(key, valid);
                if (!pick)
                    return;
                w = *pick;
                _sel.emplace(key, w);
                record(key, "selects " + c.var + "=" + TheoryIndex::element_name(_world, w));
            }
            env.push(c.var, w);
            walk(node.children[0], env);
            env.pop();
            return;
        }
        case Cee::Kind::create: {
            ElementId e;
            if (auto it = _new.find(key); it != _new.end()) {
                e = it->second;
            } else {
                e = _policy.choose_new(key);
                _new.emplace(key, e);
                _state.next_domain.push_back(e);
                _new_elements.push_back(e);
                record(key, "creates " + TheoryIndex::element_name(_world, e));
            }
            env.push(c.var, e);
            walk(node.children[0], env);
            env.pop();
            return;
        }
        }
    }

    const TheoryIndex& _index;
    Structure& _world;
    Policy& _policy;
    PolicyReader _reader;
    ProcessState _state;
    std::set<EventKey> _reached;
    std::set<EventKey> _active;
    std::map<EventKey, int> _or;
    std::map<EventKey, ElementId> _sel;
    std::map<EventKey, ElementId> _new;
    std::vector<FiredEvent> _fired;
    std::vector<GroundAtom> _new_atoms;
    std::vector<ElementId> _new_elements;
    std::vector<TraceStep> _steps;
    bool _collect = false;
    std::vector<std::pair<std::uint32_t, Assignment>> _frontier;
};

// Foundedness replay of a fixed choice map: positive endogenous reads see the
// intermediate state, negative ones and exogenous symbols the candidate.
class FoundedPolicy : public Policy
{
public:
    FoundedPolicy(const Structure& candidate, const Choices& pi, const std::set<EventKey>& events,
                  const TheoryIndex& index)
        : _candidate(candidate), _pi(pi), _events(events), _index(index)
    {
    }

    Truth read(const GroundAtom& atom, bool positive) override
    {
        bool v = positive ? state->snapshot.contains(atom) : _candidate.holds(atom);
        return v ? Truth::yes : Truth::no;
    }
    int choose_or(const EventKey& key) override { return _pi.disj.at(key); }
    std::optional<ElementId> choose_sel(const EventKey& key, const std::vector<ElementId>& valid) override
    {
        ElementId w = _pi.sel.at(key);
        if (std::find(valid.begin(), valid.end(), w) == valid.end())
            return std::nullopt;
        return w;
    }
    ElementId choose_new(const EventKey& key) override { return _pi.created.at(key); }
    void admit(const EventKey& key) override
    {
        if (!_events.contains(key))
            throw Reject{"divergence: " + _index.label(key, _candidate) +
                         " is enabled during the process but not in the final state"};
    }
    void on_cause(const GroundAtom& atom) override
    {
        if (!_candidate.holds(atom))
            throw Reject{"the process causes " + _candidate.atom_text(atom) + ", which is false in the candidate"};
    }

private:
    const Structure& _candidate;
    const Choices& _pi;
    const std::set<EventKey>& _events;
    const TheoryIndex& _index;
};

// Depth-first model search. Decisions are replayed from `prefix`; the first
// option of each new decision is taken immediately and the others are queued.
// Negative reads of atoms not yet caused are assumed lazily.
class SearchPolicy : public Policy
{
public:
    SearchPolicy(std::vector<int> prefix, std::vector<std::vector<int>>& pending, Structure& world, int budget,
                 bool has_new)
        : _prefix(std::move(prefix)), _pending(pending), _world(world), _budget(budget), _has_new(has_new)
    {
    }

    Truth read(const GroundAtom& atom, bool positive) override
    {
        if (positive)
            return state->snapshot.contains(atom) ? Truth::yes : Truth::no;
        if (state->next.contains(atom))
            return Truth::yes;
        if (auto it = assumed.find(atom); it != assumed.end())
            return it->second ? Truth::yes : Truth::no;
        return Truth::unknown;
    }

    void resolve(const GroundAtom& atom) override
    {
        if (state->next.contains(atom))
            assumed[atom] = true;
        else
            assumed[atom] = decide(2) == 1;
    }

    int choose_or(const EventKey&) override { return decide(2); }

    std::optional<ElementId> choose_sel(const EventKey& key, const std::vector<ElementId>& valid) override
    {
        auto& refused = _refused[key];
        std::vector<ElementId> candidates;
        for (ElementId e : valid)
            if (!refused.contains(e))
                candidates.push_back(e);
        // Waiting only helps if a witness may still appear.
        bool may_wait = _has_new || valid.size() < state->domain.size();
        if (candidates.empty())
            return std::nullopt;
        std::size_t options = candidates.size() + (may_wait ? 1 : 0);
        auto k = options == 1 ? 0 : static_cast<std::size_t>(decide(static_cast<int>(options)));
        if (k < candidates.size())
            return candidates[k];
        refused.insert(candidates.begin(), candidates.end());
        return std::nullopt;
    }

    ElementId choose_new(const EventKey&) override
    {
        if (_created >= _budget)
            throw Pruned{"creation budget exhausted", true};
        ++_created;
        return _world.add_element(fresh_name(_world, _counter), true);
    }

    void on_cause(const GroundAtom& atom) override
    {
        if (auto it = assumed.find(atom); it != assumed.end() && !it->second)
            throw Pruned{"caused an atom assumed false"};
    }

    std::map<GroundAtom, bool> assumed;

private:
    int decide(int n)
    {
        if (_cursor < _prefix.size())
            return _prefix[_cursor++];
        for (int i = n - 1; i >= 1; --i) {
            auto alt = _prefix;
            alt.push_back(i);
            _pending.push_back(std::move(alt));
        }
        _prefix.push_back(0);
        ++_cursor;
        return 0;
    }

    std::vector<int> _prefix;
    std::size_t _cursor = 0;
    std::vector<std::vector<int>>& _pending;
    Structure& _world;
    int _budget;
    bool _has_new;
    int _created = 0;
    std::size_t _counter = 0;
    std::map<EventKey, std::set<ElementId>> _refused;
};

struct BudgetExceeded
{
};

// Pure forward mode: every read sees the current state.
class ForwardPolicy : public Policy
{
public:
    ForwardPolicy(std::mt19937_64& rng, Structure& world, int budget) : _rng(rng), _world(world), _budget(budget)
    {
    }

    Truth read(const GroundAtom& atom, bool) override
    {
        return state->snapshot.contains(atom) ? Truth::yes : Truth::no;
    }
    int choose_or(const EventKey&) override { return std::uniform_int_distribution<int>(0, 1)(_rng); }
    std::optional<ElementId> choose_sel(const EventKey&, const std::vector<ElementId>& valid) override
    {
        if (valid.empty())
            return std::nullopt;
        return valid[std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(_rng)];
    }
    ElementId choose_new(const EventKey&) override
    {
        if (_created >= _budget)
            throw BudgetExceeded{};
        ++_created;
        return _world.add_element(fresh_name(_world, _counter), true);
    }

private:
    std::mt19937_64& _rng;
    Structure& _world;
    int _budget;
    int _created = 0;
    std::size_t _counter = 0;
};

// --- compositional cset search ---------------------------------------------------------

struct MatchResult
{
    Choices pi;
    std::set<EventKey> events;
    CSet cset;
};

// Evaluates every condition in one fixed structure. In `match` mode the
// outcome must reproduce the structure's endogenous atoms and created
// elements exactly; in `free` mode New draws from a pool of fresh elements.
class MatchSearch
{
public:
    enum class Mode : std::uint8_t { free, match };

    MatchSearch(const TheoryIndex& index, const Structure& world, std::vector<ElementId> domain, Mode mode,
                std::vector<ElementId> fresh = {})
        : _index(index), _world(world), _domain(std::move(domain)), _mode(mode), _fresh(std::move(fresh))
    {
        if (mode == Mode::match) {
            _target = endogenous_atoms(world, index.endogenous);
            auto created = world.created_ids();
            _created.insert(created.begin(), created.end());
        }
    }

    // `yield` returns true to stop the search.
    void run(const std::function<bool(MatchResult&&)>& yield)
    {
        State s;
        if (!_index.empty())
            s.agenda.push_back(Task{0, {}});
        explore(std::move(s), yield);
    }

    std::vector<FailedBranch> failed;
    std::size_t pruned = 0;
    std::string mismatch;

private:
    struct Task
    {
        std::uint32_t node;
        Assignment env;
    };

    struct State
    {
        std::vector<Task> agenda;
        MatchResult result;
        std::size_t next_fresh = 0;
        std::set<ElementId> used;
    };

    bool holds(const Formula& f, Assignment& env) const
    {
        EvalContext ctx{_world, nullptr, nullptr, _domain};
        return evaluate(f, ctx, env).value == Truth::yes;
    }

    Justification justify(const EventKey& key, const std::string& effect) const
    {
        return Justification{key, _index.label(key, _world) + " " + effect, _index.nodes[key.node].conditions};
    }

    void miss(std::string reason)
    {
        if (mismatch.empty())
            mismatch = std::move(reason);
    }

    bool explore(State s, const std::function<bool(MatchResult&&)>& yield)
    {
        while (!s.agenda.empty()) {
            Task task = std::move(s.agenda.back());
            s.agenda.pop_back();
            const Node& node = _index.nodes[task.node];
            const Cee& c = *node.cee;
            EventKey key{task.node, values(task.env)};
            s.result.events.insert(key);
            switch (c.kind) {
            case Cee::Kind::atom: {
                auto g = ground_atom(c.atom, _world, task.env);
                if (!g) {
                    if (_mode == Mode::free)
                        failed.push_back({key, "undefined term in caused atom " + render(c)});
                    miss("undefined term in caused atom " + render(c));
                    return false;
                }
                if (_mode == Mode::match && !_target.contains(*g)) {
                    miss(_world.atom_text(*g) + " would be caused but is false in the candidate");
                    return false;
                }
                s.result.cset.caused.insert(*g);
                s.result.cset.causes[*g].push_back(justify(key, "causes " + _world.atom_text(*g)));
                break;
            }
            case Cee::Kind::rule:
                if (holds(*c.condition, task.env))
                    s.agenda.push_back(Task{node.children[0], task.env});
                break;
            case Cee::Kind::conj:
                s.agenda.push_back(Task{node.children[1], task.env});
                s.agenda.push_back(Task{node.children[0], task.env});
                break;
            case Cee::Kind::disj:
                for (int k = 0; k < 2; ++k) {
                    State branch = s;
                    branch.result.pi.disj[key] = k;
                    branch.agenda.push_back(Task{node.children[static_cast<std::size_t>(k)], task.env});
                    if (explore(std::move(branch), yield))
                        return true;
                }
                return false;
            case Cee::Kind::all:
                for (auto it = _domain.rbegin(); it != _domain.rend(); ++it) {
                    task.env.push(c.var, *it);
                    if (holds(*c.condition, task.env))
                        s.agenda.push_back(Task{node.children[0], task.env});
                    task.env.pop();
                }
                break;
            case Cee::Kind::sel: {
                std::vector<ElementId> valid;
                for (ElementId e : _domain) {
                    task.env.push(c.var, e);
                    if (holds(*c.condition, task.env))
                        valid.push_back(e);
                    task.env.pop();
                }
                if (valid.empty()) {
                    std::string why = _index.label(key, _world) + " has no witness for " + render(*c.condition);
                    if (_mode == Mode::free)
                        failed.push_back({key, why});
                    miss(why);
                    return false;
                }
                for (ElementId w : valid) {
                    State branch = s;
                    branch.result.pi.sel[key] = w;
                    Assignment env = task.env;
                    env.push(c.var, w);
                    branch.agenda.push_back(Task{node.children[0], std::move(env)});
                    if (explore(std::move(branch), yield))
                        return true;
                }
                return false;
            }
            case Cee::Kind::create: {
                std::vector<ElementId> options;
                if (_mode == Mode::free) {
                    if (s.next_fresh >= _fresh.size()) {
                        ++pruned;
                        return false;
                    }
                    options.push_back(_fresh[s.next_fresh]);
                } else {
                    for (ElementId e : _created)
                        if (!s.used.contains(e))
                            options.push_back(e);
                    if (options.empty()) {
                        miss("more New events than created elements in the candidate");
                        return false;
                    }
                }
                for (ElementId e : options) {
                    State branch = s;
                    if (_mode == Mode::free)
                        ++branch.next_fresh;
                    branch.used.insert(e);
                    branch.result.pi.created[key] = e;
                    branch.result.cset.created.push_back(e);
                    branch.result.cset.creators.emplace(
                        e, justify(key, "creates " + TheoryIndex::element_name(_world, e)));
                    Assignment env = task.env;
                    env.push(c.var, e);
                    branch.agenda.push_back(Task{node.children[0], std::move(env)});
                    if (explore(std::move(branch), yield))
                        return true;
                }
                return false;
            }
            }
        }
        if (_mode == Mode::match) {
            for (const auto& a : _target)
                if (!s.result.cset.caused.contains(a)) {
                    miss(_world.atom_text(a) + " is true in the candidate but not caused");
                    return false;
                }
            for (ElementId e : _created)
                if (!s.used.contains(e)) {
                    miss("created element " + _world.element(e).name + " is not created by any New event");
                    return false;
                }
        }
        return yield(std::move(s.result));
    }

    const TheoryIndex& _index;
    const Structure& _world;
    std::vector<ElementId> _domain;
    Mode _mode;
    std::vector<ElementId> _fresh;
    std::set<GroundAtom> _target;
    std::set<ElementId> _created;
};

std::string preview(const std::vector<std::string>& items, std::size_t limit = 3)
{
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i)
        out += (i ? ", " : "") + items[i];
    if (items.size() > limit)
        out += ", ...";
    return out;
}

ProcessTrace make_trace(Structure world, std::vector<TraceStep> steps, int budget)
{
    ProcessTrace t;
    t.world = std::move(world);
    t.steps = std::move(steps);
    t.budget = budget;
    return t;
}

void require_budget(int budget)
{
    if (budget < 0)
        throw GuardError("creation budget must be non-negative, got " + std::to_string(budget));
}

} // namespace

// --- public API ---------------------------------------------------------------------

Structure ProcessTrace::state(std::optional<std::size_t> step) const
{
    const TraceStep& s = steps.at(step.value_or(steps.size() - 1));
    Structure out;
    std::vector<std::optional<ElementId>> remap(world.size());
    for (ElementId id : s.domain)
        remap[id] = out.add_element(world.element(id).name, world.element(id).created);
    for (const auto& [pred, arity] : world.arities())
        out.declare(pred, arity);
    auto copy = [&](const std::string& pred, const Tuple& t) {
        Tuple mapped;
        for (ElementId e : t) {
            if (!remap[e])
                return;
            mapped.push_back(*remap[e]);
        }
        out.insert(pred, std::move(mapped));
    };
    for (const auto& [pred, tuples] : world.relations())
        for (const auto& t : tuples)
            copy(pred, t);
    for (const auto& a : s.atoms)
        copy(a.predicate, a.args);
    for (const auto& [name, id] : world.constants())
        if (remap[id])
            out.bind_constant(name, *remap[id]);
    return out;
}

Structure default_state(const Vocabulary& vocab, const Structure& exo, const std::set<std::string>& endogenous)
{
    Structure s = exo;
    for (const auto& e : s.elements())
        if (e.created)
            throw StructuralError("exogenous part contains created element " + e.name);
    for (const auto& p : endogenous) {
        if (s.interprets(p))
            throw StructuralError("exogenous part interprets endogenous predicate " + p);
        auto it = vocab.predicates.find(p);
        s.declare(p, it == vocab.predicates.end() ? 0 : it->second);
    }
    complete_structure(s, vocab);
    return s;
}

CSetEnumeration enumerate_csets(const CausalTheory& delta, const Structure& s, int budget)
{
    require_budget(budget);
    TheoryIndex index(delta);
    CSetEnumeration out;
    out.budget = budget;
    out.world = s;
    complete_structure(out.world, vocabulary_of(delta));
    auto domain = out.world.all_ids();
    std::vector<ElementId> fresh;
    std::size_t counter = 0;
    for (int i = 0; i < budget; ++i)
        fresh.push_back(out.world.add_element(fresh_name(out.world, counter), true));

    MatchSearch search(index, out.world, domain, MatchSearch::Mode::free, fresh);
    std::set<CanonicalForm> seen;
    search.run([&](MatchResult&& r) {
        Structure key;
        std::vector<std::optional<ElementId>> remap(out.world.size());
        for (ElementId id : domain)
            remap[id] = key.add_element(out.world.element(id).name);
        for (ElementId id : r.cset.created)
            remap[id] = key.add_element(out.world.element(id).name, true);
        for (const auto& a : r.cset.caused) {
            Tuple t;
            for (ElementId e : a.args)
                t.push_back(*remap[e]);
            key.insert(a.predicate, std::move(t));
        }
        if (seen.insert(canonical_form(key)).second)
            out.csets.push_back(std::move(r.cset));
        return false;
    });
    out.failed = std::move(search.failed);
    out.pruned = search.pruned;
    return out;
}

ModelVerdict check_model(const FOClogTheory& theory, const Structure& candidate, int budget)
{
    require_budget(budget);
    const CausalTheory& causal = theory.causal_part();
    Structure world = candidate;
    complete_structure(world, vocabulary_of(theory));
    auto created = world.created_ids();
    if (created.size() > static_cast<std::size_t>(budget))
        throw GuardError("candidate has " + std::to_string(created.size()) + " created elements, budget is " +
                         std::to_string(budget));

    ModelVerdict verdict;
    for (const auto& s : theory.sentences)
        if (!evaluate_formula(*s, world)) {
            verdict.reason = "FO sentence violated: " + render(*s);
            return verdict;
        }

    TheoryIndex index(causal);
    MatchSearch search(index, world, world.all_ids(), MatchSearch::Mode::match);
    std::string founded_failure;
    bool matched = false;
    search.run([&](MatchResult&& m) {
        matched = true;
        Structure replay = world;
        FoundedPolicy policy(world, m.pi, m.events, index);
        Run run(index, replay, policy, world.initial_ids());
        try {
            run.execute();
        } catch (const Reject& r) {
            if (founded_failure.empty())
                founded_failure = r.reason;
            return false;
        } catch (const Pruned& p) {
            if (founded_failure.empty())
                founded_failure = p.reason;
            return false;
        }
        if (run.reached() != m.events || run.domain().size() != world.size()) {
            if (founded_failure.empty()) {
                std::vector<std::string> missing;
                for (const auto& k : m.events)
                    if (!run.reached().contains(k))
                        missing.push_back(index.label(k, world));
                founded_failure = "unfounded: no causal process from the default state reaches " + preview(missing);
            }
            return false;
        }
        verdict.accepted = true;
        verdict.cset = std::move(m.cset);
        Structure exo = world;
        for (const auto& pred : index.endogenous)
            exo.clear(pred);
        verdict.trace = make_trace(std::move(exo), std::move(run.steps()), budget);
        return true;
    });
    if (!verdict.accepted) {
        if (matched)
            verdict.reason = founded_failure;
        else
            verdict.reason = "no selection of choices causes exactly the candidate: " + search.mismatch;
    }
    return verdict;
}

ModelVerdict check_model(const CausalTheory& theory, const Structure& candidate, int budget)
{
    return check_model(as_foclog(theory), candidate, budget);
}

ModelSet enumerate_models(const FOClogTheory& theory, const Structure& exo, int budget)
{
    require_budget(budget);
    TheoryIndex index(theory.causal_part());
    Structure base = default_state(vocabulary_of(theory), exo, index.endogenous);

    ModelSet out;
    out.budget = budget;
    std::map<CanonicalForm, bool> cache;
    std::vector<Structure> models;
    std::vector<std::vector<int>> pending{{}};
    while (!pending.empty()) {
        auto prefix = std::move(pending.back());
        pending.pop_back();
        Structure world = base;
        SearchPolicy policy(std::move(prefix), pending, world, budget, index.has_new);
        Run run(index, world, policy, world.all_ids());
        try {
            run.execute();
        } catch (const Pruned& p) {
            out.truncated = out.truncated || p.budget;
            continue;
        }
        bool consistent = std::all_of(policy.assumed.begin(), policy.assumed.end(),
                                      [&](const auto& kv) { return !kv.second || run.atoms().contains(kv.first); });
        if (!consistent)
            continue;
        for (const auto& a : run.atoms())
            world.insert(a);
        auto key = canonical_form(world);
        if (cache.contains(key))
            continue;
        ++out.candidates;
        bool accepted = check_model(theory, world, budget).accepted;
        cache.emplace(std::move(key), accepted);
        if (accepted)
            models.push_back(std::move(world));
    }
    out.models = canonical_set(std::move(models));
    return out;
}

ModelSet enumerate_models(const CausalTheory& theory, const Structure& exo, int budget)
{
    return enumerate_models(as_foclog(theory), exo, budget);
}

ProcessTrace run_process(const FOClogTheory& theory, const Structure& exo, std::uint64_t seed, int budget)
{
    require_budget(budget);
    TheoryIndex index(theory.causal_part());
    Structure world = default_state(vocabulary_of(theory), exo, index.endogenous);
    std::mt19937_64 rng(seed);
    ForwardPolicy policy(rng, world, budget);
    Run run(index, world, policy, world.all_ids());
    bool truncated = false;
    try {
        run.execute();
    } catch (const BudgetExceeded&) {
        truncated = true;
    } catch (const Pruned& p) {
        auto trace = make_trace(world, std::move(run.steps()), budget);
        trace.accepted = false;
        trace.note = "process aborted: " + p.reason;
        return trace;
    }
    auto trace = make_trace(world, std::move(run.steps()), budget);
    trace.truncated = truncated;
    if (truncated) {
        trace.accepted = false;
        trace.note = "truncated: creation budget " + std::to_string(budget) + " exhausted";
        return trace;
    }
    auto verdict = check_model(theory, trace.state(), budget);
    trace.accepted = verdict.accepted;
    trace.note = verdict.accepted ? "final state is a model" : "final state is not a model: " + verdict.reason;
    return trace;
}

ProcessTrace run_process(const CausalTheory& theory, const Structure& exo, std::uint64_t seed, int budget)
{
    return run_process(as_foclog(theory), exo, seed, budget);
}

std::optional<Structure> run_serial(const FOClogTheory& theory, const Structure& exo, std::uint64_t seed, int budget)
{
    require_budget(budget);
    TheoryIndex index(theory.causal_part());
    Structure world = default_state(vocabulary_of(theory), exo, index.endogenous);
    std::mt19937_64 rng(seed);
    ForwardPolicy policy(rng, world, budget);
    Run run(index, world, policy, world.all_ids());
    try {
        run.execute_serial(rng);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    } catch (const Pruned&) {
        return std::nullopt;
    }
    return make_trace(world, std::move(run.steps()), budget).state();
}

} // namespace clog
