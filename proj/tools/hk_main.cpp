#include "hk_cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return hkcli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
