#include "halfshift/cli.hpp"

int main(int argc, char** argv) { return halfshift::cli::run_main(argc, argv); }
