#include "dagscope/cli/commands.hpp"

int main(int argc, char** argv) { return dagscope::cli::run(argc, argv); }
