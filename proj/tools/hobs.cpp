#include <string>
#include <vector>

#include "hobs/cli.hpp"

int main(int argc, char** argv) {
    return hobs::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
