#include "clog/parser.hpp"

#include "clog/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace clog {

namespace {

bool is_keyword(const std::string& s)
{
    return s == "And" || s == "Or" || s == "All" || s == "Sel" || s == "New" || s == "true" || s == "false";
}

class Parser
{
public:
    enum class Convention : std::uint8_t { scoped, asp };

    Parser(std::string_view text, Convention convention) : _tokens(tokenize(text)), _convention(convention) {}

    CausalTheory theory()
    {
        auto parts = statements([&] { return at_end(); });
        expect_end();
        return and_fold(parts);
    }

    FOClogTheory foclog()
    {
        FOClogTheory t;
        if (peek().is("{")) {
            next();
            t.causal = and_fold(statements([&] { return peek().is("}"); }));
            expect("}");
        }
        while (!at_end()) {
            t.sentences.push_back(formula());
            expect(".");
        }
        return t;
    }

    FormulaPtr single_formula()
    {
        auto f = formula();
        if (peek().is("."))
            next();
        expect_end();
        return f;
    }

    EDisjProgram program()
    {
        EDisjProgram p;
        while (!at_end())
            p.rules.push_back(edlp_rule());
        return p;
    }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        return _tokens[std::min(_pos + ahead, _tokens.size() - 1)];
    }
    const Token& next() { return _tokens[std::min(_pos++, _tokens.size() - 1)]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }

    [[noreturn]] void fail(const Token& t, const std::string& message) const
    {
        std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.pos, message + ", found " + found);
    }

    const Token& expect(std::string_view p)
    {
        if (!peek().is(p))
            fail(peek(), "expected '" + std::string(p) + "'");
        return next();
    }

    void expect_end()
    {
        if (!at_end())
            fail(peek(), "expected end of input");
    }

    std::string identifier(const char* what)
    {
        const Token& t = peek();
        if (t.kind != Token::Kind::ident || is_keyword(t.text) || (_convention == Convention::asp && t.text == "not"))
            fail(t, std::string("expected ") + what);
        return next().text;
    }

    template <class Stop>
    std::vector<CeePtr> statements(Stop stop)
    {
        std::vector<CeePtr> parts;
        while (!stop()) {
            if (at_end())
                fail(peek(), "expected '}'");
            parts.push_back(cee());
            expect(".");
        }
        return parts;
    }

    // --- CEE -----------------------------------------------------------------

    CeePtr cee()
    {
        SourcePos pos = peek().pos;
        CeePtr lhs = or_cee();
        while (peek().is("<-")) {
            next();
            auto body = formula();
            lhs = cee::with_pos(cee::rule(lhs, body), pos);
            if (peek().is("And") || peek().is("Or"))
                fail(peek(), "a rule cannot be the left operand of And/Or without parentheses");
        }
        return lhs;
    }

    CeePtr or_cee()
    {
        SourcePos pos = peek().pos;
        CeePtr lhs = and_cee();
        while (peek().is("Or")) {
            next();
            lhs = cee::with_pos(cee::disj(lhs, and_cee()), pos);
        }
        return lhs;
    }

    CeePtr and_cee()
    {
        SourcePos pos = peek().pos;
        CeePtr lhs = prim_cee();
        while (peek().is("And")) {
            next();
            lhs = cee::with_pos(cee::conj(lhs, prim_cee()), pos);
        }
        return lhs;
    }

    CeePtr prim_cee()
    {
        const Token& t = peek();
        SourcePos pos = t.pos;
        if (t.is("(")) {
            next();
            auto inner = cee();
            expect(")");
            return inner;
        }
        if (t.is("All") || t.is("Sel")) {
            bool is_all = t.is("All");
            next();
            auto vars = variable_list();
            expect(":");
            for (const auto& v : vars)
                _scope.push_back(v);
            auto qual = formula();
            expect("->");
            auto body = cee();
            for (std::size_t i = vars.size(); i-- > 0;) {
                auto q = i + 1 == vars.size() ? qual : fo::top();
                body = is_all ? cee::all(vars[i], q, body) : cee::sel(vars[i], q, body);
                body = cee::with_pos(body, pos);
                _scope.pop_back();
            }
            return body;
        }
        if (t.is("New")) {
            next();
            auto var = identifier("variable");
            expect("->");
            _scope.push_back(var);
            auto body = cee();
            _scope.pop_back();
            return cee::with_pos(cee::create(var, body), pos);
        }
        if (t.kind != Token::Kind::ident || is_keyword(t.text))
            fail(t, "expected a causal effect expression");
        if (bound(t.text))
            fail(t, "variable " + t.text + " used as an atom");
        return cee::with_pos(cee::atom(atom()), pos);
    }

    std::vector<std::string> variable_list()
    {
        std::vector<std::string> vars{identifier("variable")};
        while (peek().is(",")) {
            next();
            vars.push_back(identifier("variable"));
        }
        return vars;
    }

    // --- formulas --------------------------------------------------------------

    FormulaPtr formula() { return iff(); }

    FormulaPtr iff()
    {
        SourcePos pos = peek().pos;
        auto lhs = implication();
        while (peek().is("<=>")) {
            next();
            lhs = fo::with_pos(fo::iff(lhs, implication()), pos);
        }
        return lhs;
    }

    FormulaPtr implication()
    {
        SourcePos pos = peek().pos;
        auto lhs = disjunction();
        if (peek().is("=>")) {
            next();
            return fo::with_pos(fo::implies(lhs, implication()), pos);
        }
        return lhs;
    }

    FormulaPtr disjunction()
    {
        SourcePos pos = peek().pos;
        auto lhs = conjunction();
        while (peek().is("|")) {
            next();
            lhs = fo::with_pos(fo::disj(lhs, conjunction()), pos);
        }
        return lhs;
    }

    FormulaPtr conjunction()
    {
        SourcePos pos = peek().pos;
        auto lhs = unary();
        while (peek().is("&")) {
            next();
            lhs = fo::with_pos(fo::conj(lhs, unary()), pos);
        }
        return lhs;
    }

    FormulaPtr unary()
    {
        const Token& t = peek();
        SourcePos pos = t.pos;
        if (t.is("~")) {
            next();
            return fo::with_pos(fo::negate(unary()), pos);
        }
        if (t.is("!") || t.is("?")) {
            bool universal = t.is("!");
            next();
            auto vars = variable_list();
            for (const auto& v : vars)
                _scope.push_back(v);
            FormulaPtr qual = fo::top();
            if (peek().is("[")) {
                next();
                qual = formula();
                expect("]");
            }
            expect(":");
            auto body = formula();
            for (std::size_t i = vars.size(); i-- > 0;) {
                auto q = i + 1 == vars.size() ? qual : fo::top();
                body = universal ? fo::forall(vars[i], q, body) : fo::exists(vars[i], q, body);
                body = fo::with_pos(body, pos);
                _scope.pop_back();
            }
            return body;
        }
        if (t.is("(")) {
            next();
            auto inner = formula();
            expect(")");
            return inner;
        }
        if (t.is("true")) {
            next();
            return fo::with_pos(fo::top(), pos);
        }
        if (t.is("false")) {
            next();
            return fo::with_pos(fo::bottom(), pos);
        }
        if (t.kind == Token::Kind::ident && !is_keyword(t.text)) {
            const Token& after = peek(1);
            bool term_like = bound(t.text) || is_compare(after) || after.is("+");
            if (after.is("(") || !term_like)
                return fo::with_pos(fo::atom(atom()), pos);
        }
        if (t.kind == Token::Kind::ident || t.kind == Token::Kind::integer || t.kind == Token::Kind::string) {
            auto lhs = term();
            if (!is_compare(peek()))
                fail(peek(), "expected a comparison operator");
            auto op = compare_op(next());
            auto rhs = term();
            return fo::with_pos(fo::compare(op, std::move(lhs), std::move(rhs)), pos);
        }
        fail(t, "expected a formula");
    }

    static bool is_compare(const Token& t)
    {
        return t.is("=") || t.is("!=") || t.is("<") || t.is("<=") || t.is(">") || t.is(">=");
    }

    static CompareOp compare_op(const Token& t)
    {
        if (t.is("="))
            return CompareOp::eq;
        if (t.is("!="))
            return CompareOp::ne;
        if (t.is("<"))
            return CompareOp::lt;
        if (t.is("<="))
            return CompareOp::le;
        if (t.is(">"))
            return CompareOp::gt;
        return CompareOp::ge;
    }

    // --- atoms and terms -------------------------------------------------------

    Atom atom()
    {
        const Token& name = peek();
        Atom a{identifier("predicate"), {}};
        if (peek().is("(")) {
            next();
            a.args.push_back(term());
            while (peek().is(",")) {
                next();
                a.args.push_back(term());
            }
            expect(")");
        }
        auto [it, inserted] = _arity.emplace(a.predicate, a.args.size());
        if (!inserted && it->second != a.args.size())
            throw SyntaxError(name.pos, "predicate " + a.predicate + " used with arity " +
                                            std::to_string(a.args.size()) + " but earlier with " +
                                            std::to_string(it->second));
        return a;
    }

    Term term()
    {
        Term lhs = simple_term();
        while (peek().is("+")) {
            next();
            lhs = Term::sum(std::move(lhs), simple_term());
        }
        return lhs;
    }

    Term simple_term()
    {
        const Token& t = peek();
        if (t.is("(")) {
            next();
            auto inner = term();
            expect(")");
            return inner;
        }
        if (t.kind == Token::Kind::integer) {
            next();
            return Term::integer(std::stoll(t.text));
        }
        if (t.kind == Token::Kind::string) {
            next();
            return Term::constant(t.text);
        }
        if (t.kind != Token::Kind::ident || is_keyword(t.text) || (_convention == Convention::asp && t.text == "not"))
            fail(t, "expected a term");
        next();
        if (_convention == Convention::asp) {
            char c = t.text.front();
            if (std::isupper(static_cast<unsigned char>(c)) || c == '_')
                return Term::variable(t.text);
            return Term::constant(t.text);
        }
        if (bound(t.text))
            return Term::variable(t.text);
        if (std::isupper(static_cast<unsigned char>(t.text.front())))
            return Term::constant(t.text);
        throw SyntaxError(t.pos, "free variable " + t.text +
                                     " (bind it with All/Sel/New or a quantifier, or capitalise a constant)");
    }

    bool bound(const std::string& name) const
    {
        return std::find(_scope.begin(), _scope.end(), name) != _scope.end();
    }

    // --- E-disjunctive rules ---------------------------------------------------

    EDisjRule edlp_rule()
    {
        SourcePos pos = peek().pos;
        std::vector<Atom> head, positive, negative;
        if (!peek().is(":-")) {
            head.push_back(atom());
            while (peek().is(";")) {
                next();
                head.push_back(atom());
            }
        }
        if (peek().is(":-")) {
            next();
            do {
                if (peek().is("not")) {
                    next();
                    negative.push_back(atom());
                } else {
                    positive.push_back(atom());
                }
            } while (peek().is(",") && (next(), true));
        }
        expect(".");
        try {
            return make_rule(std::move(head), std::move(positive), std::move(negative), pos);
        } catch (const GuardError& e) {
            std::string msg = e.what();
            auto prefix = to_string(pos) + ": ";
            if (msg.starts_with(prefix))
                msg.erase(0, prefix.size());
            throw SyntaxError(pos, msg);
        }
    }

    std::vector<Token> _tokens;
    std::size_t _pos = 0;
    Convention _convention;
    std::vector<std::string> _scope;
    std::map<std::string, std::size_t> _arity;
};

} // namespace

CausalTheory parse_clog(std::string_view text)
{
    return Parser(text, Parser::Convention::scoped).theory();
}

FOClogTheory parse_foclog(std::string_view text)
{
    return Parser(text, Parser::Convention::scoped).foclog();
}

FormulaPtr parse_formula(std::string_view text)
{
    return Parser(text, Parser::Convention::scoped).single_formula();
}

EDisjProgram parse_edlp(std::string_view text)
{
    return Parser(text, Parser::Convention::asp).program();
}

} // namespace clog
