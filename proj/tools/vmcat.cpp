#include <iostream>
#include <string>
#include <vector>

#include "vmcat/cli.hpp"

int main(int argc, char** argv) {
  return vmcat::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
