#include "agingflow/cli.hpp"

int main(int argc, char** argv) { return agingflow::cli_main(argc, argv); }
