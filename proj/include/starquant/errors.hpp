#ifndef STARQUANT_ERRORS_HPP
#define STARQUANT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace starquant
{

// Base of every library error. kind() is a stable identifier used in JSON
// error bodies (e.g. "NotInIdeal", "TurningPointError").
class error : public std::runtime_error
{
public:
    error(std::string kind, const std::string &what) : std::runtime_error(what), m_kind(std::move(kind)) {}

    const std::string &kind() const noexcept
    {
        return m_kind;
    }

private:
    std::string m_kind;
};

// Violated operation precondition (CLI exit code 3).
class precondition_error : public error
{
public:
    using error::error;
};

// Incompatible operands: dimension, envelope rate or unit mismatch.
class mismatch_error : public error
{
public:
    using error::error;
};

} // namespace starquant

#endif
