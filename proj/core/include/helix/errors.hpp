#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace helix
{
    /// Base of every exception thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed DIMACS input. `line()` is 1-based, or 0 when the problem is
    /// not tied to a particular line (e.g. a missing header).
    class ParseError : public Error
    {
    public:
        enum class Kind
        {
            malformed,
            self_loop,
            out_of_range,
            missing_header
        };

        ParseError(Kind kind, std::size_t line, const std::string & message);

        [[nodiscard]] auto kind() const noexcept -> Kind { return _kind; }
        [[nodiscard]] auto line() const noexcept -> std::size_t { return _line; }

    private:
        Kind _kind;
        std::size_t _line;
    };

    /// Graph construction received an edge that breaks the simple-graph invariants.
    class GraphError : public Error
    {
    public:
        using Error::Error;
    };

    /// Unknown name or missing (vertex, color) entry.
    class LookupError : public Error
    {
    public:
        using Error::Error;
    };

    class EncodingError : public Error
    {
    public:
        using Error::Error;
    };

    class DecodeError : public Error
    {
    public:
        using Error::Error;
    };

    class GenerationError : public Error
    {
    public:
        using Error::Error;
    };

    /// Nucleotide-level matching requested on a codebook that is not junction safe.
    class SoundnessError : public Error
    {
    public:
        using Error::Error;
    };

    /// The tube machine was driven into an illegal state (use after discard,
    /// double discard, duplicate vertex on a strand). Always a caller bug.
    class MachineFault : public Error
    {
    public:
        using Error::Error;
    };

    /// A computation would exceed its configured size bound.
    class BudgetError : public Error
    {
    public:
        using Error::Error;
    };
}
