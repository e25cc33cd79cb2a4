#include "wordmetric/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wordmetric::cli::run(args, std::cout, std::cerr, wordmetric::cli::Environment::from_process());
}
