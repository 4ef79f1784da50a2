#include "tiedarcs/cli.hpp"

int main(int argc, char** argv) { return tiedarcs::run_cli(argc, argv); }
