#include <iostream>
#include <string>
#include <vector>

#include "seifert_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return seifert::cli::run(args, std::cout, std::cerr);
}
