/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_ERRORS_HH
#define INDSAT_GUARD_INDSAT_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace indsat
{
    /// Bad input to an operation: invalid pair, overlapping sets, wrong residue, and so on.
    class ArgumentError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A vertex count outside what the representation supports.
    class SizeError : public ArgumentError
    {
        public:
            using ArgumentError::ArgumentError;
    };

    /// Malformed trigraph, pattern, DNF or assignment text.
    class ParseError : public ArgumentError
    {
        public:
            ParseError(const std::string & what, int line) :
                ArgumentError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }

        private:
            int _line;
    };

    /// An enumeration cap would be exceeded.
    class ResourceError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif
