#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "test_util.hpp"

std::uint64_t g_seed = 0x67666f2d74657374ull;

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--seed") g_seed = std::strtoull(argv[i + 1], nullptr, 10);
    std::cout << "seed: " << g_seed << "\n";

    doctest::Context context(argc, argv);
    return context.run();
}
