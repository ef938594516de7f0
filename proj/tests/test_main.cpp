#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "seed.hpp"

namespace {
std::uint64_t g_seed = kDefaultSeed;
}

std::uint64_t test_seed() { return g_seed; }

int main(int argc, char** argv) {
  // --seed N (or --seed=N) is ours; everything else goes to doctest.
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::stoull(argv[++i]);
    } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::stoull(argv[i] + 7);
    } else {
      rest.push_back(argv[i]);
    }
  }
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
