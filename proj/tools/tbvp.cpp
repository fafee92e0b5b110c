#include "tbvp/cli.hpp"

int main(int argc, char** argv) { return tbvp::cli::run(argc, argv); }
