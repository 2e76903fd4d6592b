#pragma once

#include <stdexcept>
#include <string>

namespace clog {

struct SourcePos
{
    int line = 0;
    int column = 0;
};

std::string to_string(SourcePos pos);

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Lexing and parsing failures, located.
class SyntaxError : public Error
{
public:
    SyntaxError(SourcePos pos, const std::string& message);

    [[nodiscard]] SourcePos pos() const { return _pos; }

private:
    SourcePos _pos;
};

// Unbound variables, unknown constants.
class EvaluationError : public Error
{
public:
    using Error::Error;
};

// Arity and vocabulary mismatches between a formula/theory and a structure.
class StructuralError : public Error
{
public:
    using Error::Error;
};

// Desk-scale limits (atom counts, budgets) and violated operation preconditions.
class GuardError : public Error
{
public:
    using Error::Error;
};

} // namespace clog
