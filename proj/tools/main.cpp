#include "cli/app.hpp"

int main(int argc, char** argv) {
  return navecon::cli::run(argc, argv);
}
