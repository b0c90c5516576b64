#include <iostream>
#include <string>
#include <vector>

#include "finstage/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return finstage::cli::run(args, std::cout, std::cerr);
}
