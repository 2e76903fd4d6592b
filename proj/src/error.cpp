#include "clog/error.hpp"

namespace clog {

std::string to_string(SourcePos pos)
{
    return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

SyntaxError::SyntaxError(SourcePos pos, const std::string& message)
    : Error(to_string(pos) + ": " + message), _pos(pos)
{
}

} // namespace clog
