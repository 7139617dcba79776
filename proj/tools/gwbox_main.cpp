#include <string>
#include <vector>

#include "gwbox/cli.hpp"

int main(int argc, char** argv) {
    return gwbox::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
