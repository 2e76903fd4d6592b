#include "clog/bridge.hpp"
#include "clog/engine.hpp"
#include "clog/io.hpp"
#include "clog/parser.hpp"
#include "clog/render.hpp"
#include "clog/stable.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <variant>

namespace {

using namespace clog;

struct RunConfig
{
    std::string input;
    std::string exo;
    std::string candidate;
    std::string domain;
    std::string ints;
    std::string format = "text";
    int budget = default_budget;
    std::uint64_t seed = 0;
};

using Loaded = std::variant<FOClogTheory, EDisjProgram>;

Loaded load(const std::string& path, bool* plain_clog = nullptr)
{
    auto ext = std::filesystem::path(path).extension().string();
    auto text = read_file(path);
    if (plain_clog)
        *plain_clog = ext == ".clog";
    if (ext == ".clog")
        return as_foclog(parse_clog(text));
    if (ext == ".foclog")
        return parse_foclog(text);
    if (ext == ".edlp")
        return parse_edlp(text);
    throw Error(path + ": unknown extension '" + ext + "' (expected .clog, .foclog or .edlp)");
}

EDisjProgram need_program(const Loaded& l, const std::string& cmd)
{
    if (auto p = std::get_if<EDisjProgram>(&l))
        return *p;
    throw Error(cmd + " needs an .edlp program");
}

// --exo (if any) plus --domain names and the --ints segment.
Structure base_structure(const RunConfig& cfg)
{
    Structure s = cfg.exo.empty() ? Structure{} : load_structure(cfg.exo);
    std::stringstream names(cfg.domain);
    std::string name;
    while (std::getline(names, name, ','))
        if (!name.empty())
            s.ensure_element(name);
    if (!cfg.ints.empty()) {
        auto dots = cfg.ints.find("..");
        auto lo = dots == std::string::npos ? std::nullopt : parse_numeral(cfg.ints.substr(0, dots));
        auto hi = dots == std::string::npos ? std::nullopt : parse_numeral(cfg.ints.substr(dots + 2));
        if (!lo || !hi || *lo > *hi)
            throw Error("--ints expects lo..hi with 0 <= lo <= hi, got '" + cfg.ints + "'");
        if (*hi - *lo > 10000)
            throw GuardError("--ints segment of " + std::to_string(*hi - *lo + 1) + " elements is too large");
        for (auto v = *lo; v <= *hi; ++v)
            s.ensure_element(std::to_string(v));
    }
    return s;
}

// Union by element name; atoms of both sides are kept.
Structure merge(const Structure& a, const Structure& b)
{
    Structure out;
    for (const auto* s : {&a, &b}) {
        for (const auto& e : s->elements())
            if (!out.find(e.name))
                out.add_element(e.name, e.created);
    }
    for (const auto* s : {&a, &b})
        for (const auto& atom : s->atoms()) {
            Tuple t;
            for (auto id : atom.args)
                t.push_back(*out.find(s->element(id).name));
            out.insert(atom.predicate, std::move(t));
        }
    for (const auto* s : {&a, &b})
        for (const auto& [name, id] : s->constants())
            out.bind_constant(name, *out.find(s->element(id).name));
    return out;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text)
{
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json classification_json(const FOClogTheory& t)
{
    auto c = classify_symbols(t);
    auto v = vocabulary_of(t);
    json preds = json::object();
    for (const auto& [p, a] : v.predicates)
        preds[p] = a;
    return {{"endogenous", c.endogenous},
            {"exogenous", c.exogenous},
            {"predicates", preds},
            {"constants", v.constants},
            {"creation_free", is_creation_free(t.causal_part())},
            {"sentences", t.sentences.size()}};
}

std::string classification_text(const json& j)
{
    auto list = [](const json& a) {
        std::string out = "{";
        bool first = true;
        for (const auto& e : a) {
            out += (first ? "" : ", ") + e.get<std::string>();
            first = false;
        }
        return out + "}";
    };
    return "endogenous: " + list(j["endogenous"]) + "\nexogenous: " + list(j["exogenous"]) +
           "\nconstants: " + list(j["constants"]) + "\ncreation-free: " +
           (j["creation_free"].get<bool>() ? "yes" : "no") + "\nFO sentences: " + j["sentences"].dump() + "\n";
}

int run(const std::string& cmd, const RunConfig& cfg)
{
    bool plain = false;
    Loaded loaded = load(cfg.input, &plain);

    if (cmd == "parse") {
        std::string text;
        json j;
        if (auto p = std::get_if<EDisjProgram>(&loaded)) {
            text = render(*p);
            j = {{"kind", "edlp"}, {"rules", p->rules.size()}, {"text", text}};
        } else {
            const auto& t = std::get<FOClogTheory>(loaded);
            text = plain ? render(t.causal_part()) : render(t);
            j = classification_json(t);
            j["kind"] = plain ? "clog" : "foclog";
            j["text"] = text;
        }
        emit(cfg, j, text);
        return 0;
    }
    if (cmd == "models") {
        FOClogTheory t = std::holds_alternative<EDisjProgram>(loaded)
                             ? translate_to_foclog(std::get<EDisjProgram>(loaded))
                             : std::get<FOClogTheory>(loaded);
        Structure exo = base_structure(cfg);
        if (auto p = std::get_if<EDisjProgram>(&loaded)) {
            auto heads = p->head_predicates();
            for (const auto& [pred, arity] : p->vocabulary().predicates)
                if (!heads.contains(pred))
                    exo.declare(pred, arity);
        }
        auto m = enumerate_models(t, exo, cfg.budget);
        emit(cfg, to_json(m), to_text(m));
        return 0;
    }
    if (cmd == "check") {
        if (cfg.candidate.empty())
            throw Error("check needs --candidate");
        if (std::holds_alternative<EDisjProgram>(loaded))
            throw Error("check needs a .clog or .foclog theory; use `stable --candidate` for programs");
        Structure candidate = merge(load_structure(cfg.candidate), base_structure(cfg));
        auto v = check_model(std::get<FOClogTheory>(loaded), candidate, cfg.budget);
        emit(cfg, to_json(v), to_text(v));
        return v.accepted ? 0 : 1;
    }
    if (cmd == "trace") {
        if (std::holds_alternative<EDisjProgram>(loaded))
            throw Error("trace needs a .clog or .foclog theory");
        auto t = run_process(std::get<FOClogTheory>(loaded), base_structure(cfg), cfg.seed, cfg.budget);
        if (cfg.format == "dot")
            std::cout << to_dot(t);
        else
            emit(cfg, to_json(t), to_text(t));
        return 0;
    }
    if (cmd == "stable") {
        auto p = need_program(loaded, cmd);
        if (!cfg.candidate.empty()) {
            Structure m = merge(load_structure(cfg.candidate), base_structure(cfg));
            bool ok = is_stable(p, m);
            emit(cfg, {{"stable", ok}}, ok ? "stable\n" : "not stable\n");
            return ok ? 0 : 1;
        }
        auto models = stable_models(p, base_structure(cfg));
        std::string text;
        for (const auto& m : models)
            text += model_to_text(m) + "\n";
        text += std::to_string(models.size()) + " stable model(s)\n";
        emit(cfg, {{"count", models.size()}, {"models", models_to_json(models)}}, text);
        return 0;
    }
    if (cmd == "translate") {
        auto t = translate_to_foclog(need_program(loaded, cmd));
        auto text = render(t);
        emit(cfg, {{"text", text}}, text);
        return 0;
    }
    if (cmd == "weaken") {
        // Programs are weakened through their translation.
        if (auto p = std::get_if<EDisjProgram>(&loaded))
            loaded = translate_to_foclog(*p);
        const auto& t = std::get<FOClogTheory>(loaded);
        auto text = render(plain ? *fo_weakening(t.causal_part()) : *fo_weakening(t)) + ".\n";
        emit(cfg, {{"text", text}}, text);
        return 0;
    }
    if (cmd == "analyze") {
        if (auto p = std::get_if<EDisjProgram>(&loaded)) {
            auto r = analyze(*p, base_structure(cfg));
            emit(cfg, to_json(r), to_text(r));
        } else {
            auto j = classification_json(std::get<FOClogTheory>(loaded));
            emit(cfg, j, classification_text(j));
        }
        return 0;
    }
    if (cmd == "compare") {
        auto r = compare_semantics(need_program(loaded, cmd), base_structure(cfg), cfg.budget);
        emit(cfg, to_json(r), to_text(r));
        return r.counterexamples.empty() ? 0 : 1;
    }
    throw Error("unknown subcommand " + cmd);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Causal effect expressions, FO(C-Log) and E-disjunctive programs"};
    app.require_subcommand(1);
    RunConfig cfg;

    struct Spec
    {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"parse", "parse a .clog, .foclog or .edlp file and print its canonical form"},
        {"models", "enumerate the models of a theory (programs are translated first)"},
        {"check", "check whether --candidate is a model of a theory"},
        {"trace", "run one causal process and print its trace"},
        {"stable", "stable models of a program, or check --candidate"},
        {"translate", "translate a program into an FO(C-Log) theory"},
        {"weaken", "print the FO weakening of a creation-free theory"},
        {"analyze", "overlap and negation-recursion analysis, or symbol classification"},
        {"compare", "compare stable, FO(C-Log) and FO-weakening model sets of a program"},
    };
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("input", cfg.input, "input file")->required()->check(CLI::ExistingFile);
        sub->add_option("--exo", cfg.exo, "exogenous interpretation (JSON)")->check(CLI::ExistingFile);
        sub->add_option("--domain", cfg.domain, "extra domain elements, comma separated");
        sub->add_option("--ints", cfg.ints, "integer segment lo..hi");
        sub->add_option("--budget", cfg.budget, "maximum number of created elements")
            ->check(CLI::Validator(
                [](std::string& v) {
                    return !v.empty() && v.find_first_not_of("0123456789") == std::string::npos
                               ? std::string()
                               : "budget must be a non-negative integer, got '" + v + "'";
                },
                "INT>=0"));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        sub->add_option("--seed", cfg.seed, "random seed (CLOG_SEED overrides)");
        if (std::string(s.name) == "check" || std::string(s.name) == "stable")
            sub->add_option("--candidate", cfg.candidate, "candidate structure (JSON)")
                ->check(CLI::ExistingFile);
    }
    if (argc > 1 && argv[1][0] != '-' &&
        std::none_of(std::begin(specs), std::end(specs), [&](const Spec& s) { return std::string(s.name) == argv[1]; })) {
        std::cerr << "error: unknown subcommand '" << argv[1]
                  << "' (expected parse, models, check, trace, stable, translate, weaken, analyze or compare)\n";
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (const char* env = std::getenv("CLOG_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: CLOG_SEED must be a non-negative integer, got '" << env << "'\n";
            return 2;
        }
    }
    auto* sub = app.get_subcommands().front();
    if (cfg.format == "dot" && sub->get_name() != "trace") {
        std::cerr << "error: --format dot is only available for trace\n";
        return 2;
    }
    try {
        return run(sub->get_name(), cfg);
    } catch (const SyntaxError& e) {
        std::cerr << cfg.input << ":" << e.what() << "\n";
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
