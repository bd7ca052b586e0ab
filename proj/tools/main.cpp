#include "matgamma/harness/cli.hpp"

int main(int argc, char** argv) { return matgamma::harness::run_cli(argc, argv); }
