#include "chordck/cli.hpp"

int main(int argc, char** argv) { return chordck::cli::run(argc, argv); }
