#include "eqknot/cli.hpp"

int main(int argc, char** argv) { return eqknot::cli::run(argc, argv); }
