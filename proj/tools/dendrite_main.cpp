#include <string>
#include <vector>

#include "dendrite/cli.hpp"

int main(int argc, char** argv) {
    return dendrite::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
