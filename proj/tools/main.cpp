#include <string>
#include <vector>

#include "varex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return varex::cli::run(args);
}
