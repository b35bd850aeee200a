#include "modsing/cli.hpp"

int main(int argc, char** argv) { return modsing::cli::run(argc, argv); }
