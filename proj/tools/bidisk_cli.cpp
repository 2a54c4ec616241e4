#include "bidisk/cli.hpp"

int main(int argc, char** argv) { return bidisk::run_cli(argc, argv); }
