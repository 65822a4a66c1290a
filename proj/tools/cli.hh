/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_TOOLS_CLI_HH
#define INDSAT_GUARD_TOOLS_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace indsat::cli
{
    inline constexpr int exit_success = 0;
    inline constexpr int exit_failure = 1;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_resource = 3;

    /// argv[0] is the program name. Reports go to out, one-line diagnostics to err.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    auto version() -> std::string;
}

#endif
