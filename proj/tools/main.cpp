#include <iostream>
#include <string>
#include <vector>

#include "zarchow/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const zarchow::CliResult res = zarchow::run_cli(args);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
