#include <string>
#include <vector>

#include "qwom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qwom::run_command(args);
}
