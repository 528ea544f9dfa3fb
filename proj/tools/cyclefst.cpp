#include "cyclefst/cli.hpp"

int main(int argc, char** argv) { return cyclefst::cli::main(argc, argv); }
