#pragma once

#include "clog/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clog {

struct Token
{
    enum class Kind : std::uint8_t { ident, integer, string, punct, end };

    Kind kind = Kind::end;
    std::string text;
    SourcePos pos;

    [[nodiscard]] bool is(std::string_view punct_or_keyword) const
    {
        return (kind == Kind::punct || kind == Kind::ident) && text == punct_or_keyword;
    }
};

// Splits source text into tokens. `//` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view source);

bool is_identifier_start(char c);
bool is_identifier_char(char c);

} // namespace clog
