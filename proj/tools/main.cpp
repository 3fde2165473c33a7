#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hsnum/cli.hpp"

int main(int argc, char** argv) {
  hsnum::cli::Context ctx;
  if (char const* cap = std::getenv("HSNUM_CAP")) {
    ctx.env_cap = cap;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return hsnum::cli::run(args, std::cout, std::cerr, ctx);
}
