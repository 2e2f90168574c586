#include "neflab/cli.hpp"

int main(int argc, char** argv) {
  return neflab::cli::run(argc, argv);
}
