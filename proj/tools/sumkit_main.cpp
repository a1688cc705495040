#include "sumkit/cli.hpp"

int main(int argc, char** argv) { return sumkit::cli::run(argc, argv); }
