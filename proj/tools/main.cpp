#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  return pulsefront::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
