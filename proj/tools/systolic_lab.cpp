#include <iostream>

#include "systolic/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return systolic::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
