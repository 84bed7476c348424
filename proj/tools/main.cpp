#include <fstream>
#include <iostream>

#include "hypdiv/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const hypdiv::CommandResult r = hypdiv::run_command(args);
  if (r.out_path.empty()) {
    std::cout << r.output;
  } else {
    std::ofstream out(r.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << r.out_path << "\n";
      return 1;
    }
    out << r.output;
  }
  return r.exit_code;
}
