#include <vector>

#include "causalsearch/experiment.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return causalsearch::cli_main(args);
}
