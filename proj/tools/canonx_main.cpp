#include <string>
#include <vector>

#include "canonx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return canonx::cli::main_entry(args);
}
