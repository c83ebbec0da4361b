#include "ncdp/cli.hpp"

int main(int argc, char** argv) { return ncdp::cli::main(argc, argv); }
