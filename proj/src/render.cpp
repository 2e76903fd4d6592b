#include "clog/render.hpp"

#include "clog/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace clog {

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

namespace {

bool is_reserved(const std::string& s)
{
    return s == "And" || s == "Or" || s == "All" || s == "Sel" || s == "New" || s == "true" || s == "false" ||
           s == "not";
}

bool is_plain_identifier(const std::string& s)
{
    if (s.empty() || !is_identifier_start(s.front()))
        return false;
    return std::all_of(s.begin() + 1, s.end(), is_identifier_char);
}

class Printer
{
public:
    enum class Convention : std::uint8_t { scoped, asp };

    explicit Printer(Convention convention) : _convention(convention) {}

    std::string term(const Term& t)
    {
        switch (t.kind) {
        case Term::Kind::variable: return t.name;
        case Term::Kind::integer: return std::to_string(t.value);
        case Term::Kind::constant: return constant(t.name);
        case Term::Kind::sum: {
            std::string rhs = term(t.operands[1]);
            if (t.operands[1].kind == Term::Kind::sum)
                rhs = "(" + rhs + ")";
            return term(t.operands[0]) + " + " + rhs;
        }
        }
        return {};
    }

    std::string atom(const Atom& a)
    {
        std::string out = a.predicate;
        if (!a.args.empty()) {
            out += "(";
            for (std::size_t i = 0; i < a.args.size(); ++i)
                out += (i ? ", " : "") + term(a.args[i]);
            out += ")";
        }
        return out;
    }

    // Precedence: <=> 0, => 1, | 2, & 3, unary 4. Quantifier bodies extend to
    // the right, so a quantifier prints bare only in a rightmost, level-0 slot.
    std::string formula(const Formula& f, int ctx = 0, bool rightmost = true)
    {
        auto wrap = [](bool w, std::string s) { return w ? "(" + s + ")" : s; };
        switch (f.kind) {
        case Formula::Kind::truth: return "true";
        case Formula::Kind::falsity: return "false";
        case Formula::Kind::atom: return atom(f.atom);
        case Formula::Kind::compare: return term(f.lhs) + " " + symbol(f.op) + " " + term(f.rhs);
        case Formula::Kind::negation: return "~" + formula(f.child(0), 4, rightmost);
        case Formula::Kind::equivalence: {
            bool w = ctx > 0;
            bool r = w || rightmost;
            return wrap(w, formula(f.child(0), 0, false) + " <=> " + formula(f.child(1), 1, r));
        }
        case Formula::Kind::implication: {
            bool w = ctx > 1;
            bool r = w || rightmost;
            return wrap(w, formula(f.child(0), 2, false) + " => " + formula(f.child(1), 1, r));
        }
        case Formula::Kind::disjunction: {
            bool w = ctx > 2;
            bool r = w || rightmost;
            return wrap(w, formula(f.child(0), 2, false) + " | " + formula(f.child(1), 3, r));
        }
        case Formula::Kind::conjunction: {
            bool w = ctx > 3;
            bool r = w || rightmost;
            return wrap(w, formula(f.child(0), 3, false) + " & " + formula(f.child(1), 4, r));
        }
        case Formula::Kind::forall:
        case Formula::Kind::exists: {
            std::string out = f.kind == Formula::Kind::forall ? "! " : "? ";
            out += f.var;
            _bound.push_back(f.var);
            if (f.child(0).kind != Formula::Kind::truth)
                out += " [" + formula(f.child(0)) + "]";
            out += ": " + formula(f.child(1));
            _bound.pop_back();
            return wrap(ctx > 0 || !rightmost, out);
        }
        }
        return {};
    }

    // Precedence: <- 0, Or 1, And 2, primary 3. Binders extend to the right.
    std::string cee(const Cee& c, int ctx = 0, bool rightmost = true)
    {
        auto wrap = [](bool w, std::string s) { return w ? "(" + s + ")" : s; };
        switch (c.kind) {
        case Cee::Kind::atom: return atom(c.atom);
        case Cee::Kind::rule: {
            bool w = ctx > 0;
            return wrap(w, cee(c.child(0), 0, false) + " <- " + formula(*c.condition));
        }
        case Cee::Kind::disj: {
            bool w = ctx > 1;
            bool r = w || rightmost;
            return wrap(w, cee(c.child(0), 1, false) + " Or " + cee(c.child(1), 2, r));
        }
        case Cee::Kind::conj: {
            bool w = ctx > 2;
            bool r = w || rightmost;
            return wrap(w, cee(c.child(0), 2, false) + " And " + cee(c.child(1), 3, r));
        }
        case Cee::Kind::all:
        case Cee::Kind::sel: {
            std::string out = c.kind == Cee::Kind::all ? "All " : "Sel ";
            out += c.var;
            _bound.push_back(c.var);
            out += ": " + formula(*c.condition) + " -> " + cee(c.child(0));
            _bound.pop_back();
            return wrap(ctx > 0 || !rightmost, out);
        }
        case Cee::Kind::create: {
            std::string out = "New " + c.var;
            _bound.push_back(c.var);
            out += " -> " + cee(c.child(0));
            _bound.pop_back();
            return wrap(ctx > 0 || !rightmost, out);
        }
        }
        return {};
    }

    std::string rule(const EDisjRule& r)
    {
        std::string out;
        for (std::size_t i = 0; i < r.head.size(); ++i)
            out += (i ? " ; " : "") + atom(r.head[i]);
        if (!r.positive.empty() || !r.negative.empty()) {
            out += out.empty() ? ":- " : " :- ";
            bool first = true;
            for (const auto& a : r.positive) {
                out += (first ? "" : ", ") + atom(a);
                first = false;
            }
            for (const auto& a : r.negative) {
                out += (first ? "not " : ", not ") + atom(a);
                first = false;
            }
        }
        return out + ".";
    }

private:
    std::string constant(const std::string& name)
    {
        if (!is_plain_identifier(name) || is_reserved(name))
            return quote(name);
        char c = name.front();
        bool upper = std::isupper(static_cast<unsigned char>(c));
        if (_convention == Convention::asp)
            return upper || c == '_' ? quote(name) : name;
        if (!upper || std::find(_bound.begin(), _bound.end(), name) != _bound.end())
            return quote(name);
        return name;
    }

    Convention _convention;
    std::vector<std::string> _bound;
};

} // namespace

std::string render(const CausalTheory& theory)
{
    std::string out;
    Printer p(Printer::Convention::scoped);
    for (const auto& part : and_unfold(theory))
        out += p.cee(*part) + ".\n";
    return out;
}

std::string render(const FOClogTheory& theory)
{
    std::string out;
    Printer p(Printer::Convention::scoped);
    if (theory.causal) {
        out += "{\n";
        for (const auto& part : and_unfold(*theory.causal))
            out += "  " + p.cee(*part) + ".\n";
        out += "}\n";
    }
    for (const auto& s : theory.sentences)
        out += p.formula(*s) + ".\n";
    return out;
}

std::string render(const EDisjProgram& program)
{
    std::string out;
    Printer p(Printer::Convention::asp);
    for (const auto& r : program.rules)
        out += p.rule(r) + "\n";
    return out;
}

std::string render(const Cee& c)
{
    return Printer(Printer::Convention::scoped).cee(c);
}

std::string render(const Formula& f)
{
    return Printer(Printer::Convention::scoped).formula(f);
}

std::string render(const EDisjRule& r)
{
    return Printer(Printer::Convention::asp).rule(r);
}

std::string render(const Term& t)
{
    return Printer(Printer::Convention::scoped).term(t);
}

} // namespace clog
