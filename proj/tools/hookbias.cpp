#include <iostream>
#include <vector>

#include "hookbias/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hookbias::run_cli(args, std::cout, std::cerr);
}
