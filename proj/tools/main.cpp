#include <iostream>
#include <string>
#include <vector>

#include "breadthkit/parallel.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  breadthkit::apply_thread_limit_from_env();
  std::vector<std::string> args(argv + 1, argv + argc);
  return breadthkit::cli::run(args, std::cout, std::cerr);
}
