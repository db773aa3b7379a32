// Binary entry point; all logic lives in the library for testability.

#include "zsp/cli.hpp"

int main(int argc, char** argv) { return zsp::cli_main(argc, argv); }
