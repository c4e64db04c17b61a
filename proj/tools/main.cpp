#include "cli.hpp"

int main(int argc, char** argv) { return tiltwall::cli::main(argc, argv); }
