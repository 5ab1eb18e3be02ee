#include "treealg/cli.hpp"

int main(int argc, char** argv) {
    return treealg::runCli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
