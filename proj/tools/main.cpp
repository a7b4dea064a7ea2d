#include "fredpair/cli.hpp"

int main(int argc, char** argv) { return fredpair::run_cli(argc, argv); }
