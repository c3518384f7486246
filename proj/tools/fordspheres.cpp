#include "ford/cli.hpp"

int main(int argc, char** argv) { return ford::cli::run(argc, argv); }
