#include "pareq/cli.hpp"

int main(int argc, char** argv) { return pareq::cli_main(argc, argv); }
