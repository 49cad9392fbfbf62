#include <iostream>

#include "dsurf/cli.hpp"

int main(int argc, char** argv) {
    return dsurf::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
