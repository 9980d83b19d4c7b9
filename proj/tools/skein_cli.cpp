#include <cstdlib>
#include <iostream>

#include "skein/cli.hpp"

int main(int argc, char** argv) {
  const char* env = std::getenv("SKEIN_FORMAT");
  return skein::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr, env ? env : "");
}
