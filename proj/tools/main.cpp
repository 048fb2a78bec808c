#include <vector>

#include "amoebalab/cli.hpp"

int main(int argc, char** argv) {
    return amoebalab::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
