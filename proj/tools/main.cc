/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv, argv + argc);
    return indsat::cli::run(args, std::cout, std::cerr);
}
