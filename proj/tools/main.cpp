#include "farswarm/cli.hpp"

int main(int argc, char** argv) { return farswarm::cli_main(argc, argv); }
