#include "sdo/cli.hpp"

int main(int argc, char** argv) { return sdo::cli_main(argc, argv); }
