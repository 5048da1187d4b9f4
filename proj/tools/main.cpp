#include <string>
#include <vector>

#include "spinrad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinrad::cli::run(args);
}
