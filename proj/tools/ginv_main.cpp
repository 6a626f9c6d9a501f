#include <iostream>

#include "ginv/cli.hpp"

int main(int argc, char** argv) {
  const ginv::cli::Result r = ginv::cli::run({argv + 1, argv + argc});
  (r.exit_code == 2 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
