#include "clog/lexer.hpp"

#include <array>
#include <cctype>

namespace clog {

bool is_identifier_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view src)
{
    static constexpr std::array<std::string_view, 27> puncts = {
        "<=>", "<=", "<-", "=>", "->", ":-", "!=", ">=", "(", ")", "[", "]", "{", "}",
        ",",   ".",  ":",  ";",  "&",  "|",  "~",  "=",  "<", ">", "!", "?", "+",
    };
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    int col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        SourcePos pos{line, col};
        if (is_identifier_start(c)) {
            std::size_t j = i + 1;
            while (j < src.size() && is_identifier_char(src[j]))
                ++j;
            out.push_back({Token::Kind::ident, std::string(src.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            if (j - i > 18)
                throw SyntaxError(pos, "integer literal too long");
            out.push_back({Token::Kind::integer, std::string(src.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            std::string text;
            while (j < src.size() && src[j] != '"') {
                if (src[j] == '\n')
                    throw SyntaxError(pos, "unterminated string");
                if (src[j] == '\\' && j + 1 < src.size())
                    ++j;
                text += src[j];
                ++j;
            }
            if (j >= src.size())
                throw SyntaxError(pos, "unterminated string");
            out.push_back({Token::Kind::string, std::move(text), pos});
            advance(j + 1 - i);
            continue;
        }
        bool matched = false;
        for (auto p : puncts) {
            if (src.substr(i, p.size()) == p) {
                out.push_back({Token::Kind::punct, std::string(p), pos});
                advance(p.size());
                matched = true;
                break;
            }
        }
        if (!matched)
            throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::end, "", {line, col}});
    return out;
}

} // namespace clog
