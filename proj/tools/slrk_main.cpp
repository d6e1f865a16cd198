#include "slrk/cli.hpp"

int main(int argc, char** argv) { return slrk::cli::main(argc, argv); }
