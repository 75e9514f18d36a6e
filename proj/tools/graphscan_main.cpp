#include "graphscan/cli.hpp"

int main(int argc, char** argv) { return graphscan::cli::run(argc, argv); }
