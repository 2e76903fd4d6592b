#include "clog/io.hpp"

#include <fstream>
#include <sstream>

namespace clog {

namespace {

std::string element_name(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<std::int64_t>());
    throw StructuralError("domain element must be a string or an integer, got " + v.dump());
}

std::string brace(const std::vector<std::string>& items)
{
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? ", " : "") + items[i];
    return out + "}";
}

std::vector<std::string> atom_texts(const Structure& s, const std::set<GroundAtom>& atoms)
{
    std::vector<std::string> out;
    for (const auto& a : atoms)
        out.push_back(s.atom_text(a));
    return out;
}

std::vector<std::string> names(const Structure& s, const std::vector<ElementId>& ids)
{
    std::vector<std::string> out;
    for (auto id : ids)
        out.push_back(s.element(id).name);
    return out;
}

json witness_to_json(const AnalysisReport& r, const OccurrenceWitness& w)
{
    json eta = json::object();
    for (const auto& [var, id] : w.eta)
        eta[var] = r.domain.element(id).name;
    return {{"rule", w.rule}, {"head_index", w.head_index}, {"eta", eta}, {"atom", r.domain.atom_text(w.atom)}};
}

} // namespace

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Structure structure_from_json(const json& j)
{
    if (!j.is_object())
        throw StructuralError("structure must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "domain" && key != "created" && key != "predicates" && key != "constants")
            throw StructuralError("unknown structure field '" + key + "'");
    Structure s;
    const json domain = j.value("domain", json::array());
    const json created = j.value("created", json::array());
    for (const auto& e : domain)
        s.add_element(element_name(e));
    for (const auto& e : created)
        s.add_element(element_name(e), true);
    const json preds = j.value("predicates", json::object());
    for (const auto& [pred, tuples] : preds.items()) {
        if (!tuples.is_array())
            throw StructuralError("extension of " + pred + " must be a list of tuples");
        for (const auto& t : tuples) {
            Tuple args;
            if (!t.is_array())
                args.push_back(s.ensure_element(element_name(t)));
            else
                for (const auto& e : t)
                    args.push_back(s.ensure_element(element_name(e)));
            s.insert(pred, std::move(args));
        }
    }
    const json constants = j.value("constants", json::object());
    for (const auto& [name, value] : constants.items())
        s.bind_constant(name, s.ensure_element(element_name(value)));
    return s;
}

Structure load_structure(const std::filesystem::path& path)
{
    try {
        return structure_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw StructuralError(path.string() + ": " + e.what());
    }
}

json structure_to_json(const Structure& s)
{
    json domain = json::array(), created = json::array(), preds = json::object();
    for (const auto& e : s.elements())
        (e.created ? created : domain).push_back(e.name);
    for (const auto& [pred, tuples] : s.relations()) {
        json list = json::array();
        for (const auto& t : tuples) {
            json row = json::array();
            for (auto id : t)
                row.push_back(s.element(id).name);
            list.push_back(row);
        }
        preds[pred] = list;
    }
    json out = {{"domain", domain}, {"created", created}, {"predicates", preds}};
    if (!s.constants().empty()) {
        json constants = json::object();
        for (const auto& [name, id] : s.constants())
            constants[name] = s.element(id).name;
        out["constants"] = constants;
    }
    return out;
}

json model_to_json(const Structure& s)
{
    json j = structure_to_json(s);
    json atoms = json::array();
    std::vector<std::string> texts;
    for (const auto& a : s.atoms())
        texts.push_back(s.atom_text(a));
    std::sort(texts.begin(), texts.end());
    for (auto& t : texts)
        atoms.push_back(t);
    return {{"domain", j["domain"]}, {"created", j["created"]}, {"atoms", atoms}};
}

std::string model_to_text(const Structure& s)
{
    std::vector<std::string> texts;
    for (const auto& a : s.atoms())
        texts.push_back(s.atom_text(a));
    std::sort(texts.begin(), texts.end());
    auto out = brace(texts);
    auto created = names(s, s.created_ids());
    if (!created.empty())
        out += " created " + brace(created);
    return out;
}

json models_to_json(const std::vector<Structure>& models)
{
    json out = json::array();
    for (const auto& m : models)
        out.push_back(model_to_json(m));
    return out;
}

json to_json(const ModelSet& m)
{
    return {{"budget", m.budget},
            {"truncated", m.truncated},
            {"candidates", m.candidates},
            {"count", m.models.size()},
            {"models", models_to_json(m.models)}};
}

std::string to_text(const ModelSet& m)
{
    std::string out;
    for (const auto& s : m.models)
        out += model_to_text(s) + "\n";
    out += std::to_string(m.models.size()) + " model(s), budget " + std::to_string(m.budget);
    if (m.truncated)
        out += ", truncated: some branch needed more created elements";
    return out + "\n";
}

json to_json(const ProcessTrace& t)
{
    json steps = json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        json fired = json::array();
        for (const auto& f : s.fired)
            fired.push_back(f.label);
        json fresh = json::array();
        for (const auto& a : s.new_atoms)
            fresh.push_back(t.world.atom_text(a));
        steps.push_back({{"step", i},
                         {"fired", fired},
                         {"new_atoms", fresh},
                         {"new_elements", names(t.world, s.new_elements)},
                         {"atoms", atom_texts(t.world, s.atoms)},
                         {"domain", names(t.world, s.domain)}});
    }
    json out = {{"budget", t.budget}, {"truncated", t.truncated}};
    if (t.accepted)
        out["accepted"] = *t.accepted;
    if (!t.note.empty())
        out["note"] = t.note;
    out["steps"] = steps;
    return out;
}

std::string to_text(const ProcessTrace& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        auto state = t.state(i);
        std::vector<std::string> texts;
        for (const auto& a : state.atoms())
            texts.push_back(state.atom_text(a));
        out += "state " + std::to_string(i) + ": " + brace(texts);
        auto created = names(state, state.created_ids());
        if (!created.empty())
            out += " created " + brace(created);
        out += "\n";
        for (const auto& f : s.fired)
            out += "  fired " + f.label + "\n";
    }
    out += "budget " + std::to_string(t.budget);
    if (t.truncated)
        out += ", truncated";
    out += "\n";
    if (!t.note.empty())
        out += t.note + "\n";
    return out;
}

std::string to_dot(const ProcessTrace& t)
{
    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out;
    };
    std::string out = "digraph trace {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        auto state = t.state(i);
        std::vector<std::string> texts;
        for (const auto& a : state.atoms())
            texts.push_back(state.atom_text(a));
        out += "  s" + std::to_string(i) + " [label=\"" + escape(brace(texts)) + "\"];\n";
    }
    for (std::size_t i = 1; i < t.steps.size(); ++i) {
        std::string label;
        for (const auto& f : t.steps[i].fired)
            label += (label.empty() ? "" : "\\n") + escape(f.label);
        out += "  s" + std::to_string(i - 1) + " -> s" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    return out + "}\n";
}

json to_json(const ModelVerdict& v)
{
    json out = {{"accepted", v.accepted}};
    if (!v.reason.empty())
        out["reason"] = v.reason;
    if (v.cset && v.trace) {
        const Structure& w = v.trace->world;
        json causes = json::object();
        for (const auto& [atom, why] : v.cset->causes) {
            json list = json::array();
            for (const auto& j : why)
                list.push_back({{"event", j.label}, {"conditions", j.conditions}});
            causes[w.atom_text(atom)] = list;
        }
        json creators = json::object();
        for (const auto& [id, j] : v.cset->creators)
            creators[w.element(id).name] = {{"event", j.label}, {"conditions", j.conditions}};
        out["cset"] = {{"caused", atom_texts(w, v.cset->caused)},
                       {"created", names(w, v.cset->created)},
                       {"causes", causes},
                       {"creators", creators}};
    }
    if (v.trace)
        out["trace"] = to_json(*v.trace);
    return out;
}

std::string to_text(const ModelVerdict& v)
{
    std::string out = v.accepted ? "accepted\n" : "rejected: " + v.reason + "\n";
    if (v.trace)
        out += to_text(*v.trace);
    return out;
}

json to_json(const CSetEnumeration& e)
{
    json csets = json::array();
    for (const auto& c : e.csets)
        csets.push_back({{"caused", atom_texts(e.world, c.caused)}, {"created", names(e.world, c.created)}});
    json failed = json::array();
    for (const auto& f : e.failed)
        failed.push_back(f.reason);
    return {{"budget", e.budget}, {"pruned", e.pruned}, {"csets", csets}, {"failed", failed}};
}

json to_json(const AnalysisReport& r)
{
    json out = {{"non_overlapping", r.non_overlapping}};
    if (r.overlap)
        out["overlap"] = {witness_to_json(r, r.overlap->first), witness_to_json(r, r.overlap->second)};
    out["neg_recursion"] = r.neg_recursion;
    if (r.neg_recursion)
        out["cycle"] = r.cycle;
    out["head_symbols"] = r.head_symbols;
    out["never_in_head"] = r.never_in_head;
    return out;
}

std::string to_text(const AnalysisReport& r)
{
    std::string out = "non-overlapping: " + std::string(r.non_overlapping ? "yes" : "no") + "\n";
    if (r.overlap) {
        auto describe = [&](const OccurrenceWitness& w) {
            std::vector<std::string> eta;
            for (const auto& [var, id] : w.eta)
                eta.push_back(var + "=" + r.domain.element(id).name);
            return r.domain.atom_text(w.atom) + " at rule " + std::to_string(w.rule) + " head " +
                   std::to_string(w.head_index) + " " + brace(eta);
        };
        out += "  " + describe(r.overlap->first) + "\n  " + describe(r.overlap->second) + "\n";
    }
    out += "recursion over negation: " + std::string(r.neg_recursion ? "yes" : "no") + "\n";
    if (r.neg_recursion) {
        std::string cycle;
        for (const auto& p : r.cycle)
            cycle += (cycle.empty() ? "" : " -> ") + p;
        out += "  " + cycle + "\n";
    }
    out += "head symbols: " + brace({r.head_symbols.begin(), r.head_symbols.end()}) + "\n";
    out += "never in a head: " + brace({r.never_in_head.begin(), r.never_in_head.end()}) + "\n";
    return out;
}

json to_json(const ComparisonReport& r)
{
    json counter = json::array();
    for (const auto& c : r.counterexamples)
        counter.push_back({{"expectation", c.expectation}, {"detail", c.detail}, {"witness", model_to_json(c.witness)}});
    json out = {{"budget", r.budget}, {"stable", models_to_json(r.stable)}, {"foclog", models_to_json(r.foclog)}};
    out["fo_weak"] = r.fo_weak_computed ? models_to_json(r.fo_weak) : json(nullptr);
    out["foclog_truncated"] = r.foclog_truncated;
    out["relations"] = {{"stable_subset_foclog", r.stable_subset_foclog},
                        {"foclog_subset_stable", r.foclog_subset_stable},
                        {"equal", r.equal()},
                        {"foclog_subset_fo_weak", r.fo_weak_computed ? json(r.foclog_subset_fo_weak) : json(nullptr)}};
    out["expectations"] = {{"equal", r.expect_equal},
                           {"stable_subset_foclog", r.expect_stable_subset_foclog},
                           {"foclog_subset_fo_weak", r.expect_foclog_subset_fo_weak}};
    out["counterexamples"] = counter;
    out["analysis"] = to_json(r.analysis);
    return out;
}

std::string to_text(const ComparisonReport& r)
{
    std::string out = "stable models:\n";
    for (const auto& m : r.stable)
        out += "  " + model_to_text(m) + "\n";
    out += "FO(C-Log) models (budget " + std::to_string(r.budget) + (r.foclog_truncated ? ", truncated" : "") + "):\n";
    for (const auto& m : r.foclog)
        out += "  " + model_to_text(m) + "\n";
    if (r.fo_weak_computed) {
        out += "FO weakening models:\n";
        for (const auto& m : r.fo_weak)
            out += "  " + model_to_text(m) + "\n";
    } else {
        out += "FO weakening models: skipped, atom space above the enumeration limit\n";
    }
    auto rel = [](bool holds, bool strict) { return holds ? (strict ? "strict subset" : "equal") : "no"; };
    out += "stable in FO(C-Log): " + std::string(rel(r.stable_subset_foclog, !r.foclog_subset_stable)) + "\n";
    out += "FO(C-Log) in stable: " + std::string(r.foclog_subset_stable ? "yes" : "no") + "\n";
    if (r.fo_weak_computed)
        out += "FO(C-Log) in FO weakening: " + std::string(r.foclog_subset_fo_weak ? "yes" : "no") + "\n";
    out += "expected: " + std::string(r.expect_equal ? "equal" : r.expect_stable_subset_foclog ? "stable in FO(C-Log)" : "nothing") + "\n";
    out += std::to_string(r.counterexamples.size()) + " counterexample(s)\n";
    for (const auto& c : r.counterexamples)
        out += "  " + c.expectation + ": " + c.detail + ": " + model_to_text(c.witness) + "\n";
    return out;
}

} // namespace clog
