// framoid - exact computations in framed and tied diagram monoids

#include "framoid/cli.hpp"

int main(int argc, char** argv) {
  return framoid::cli::run(argc, argv);
}
