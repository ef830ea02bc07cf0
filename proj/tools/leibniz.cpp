#include "leibniz/cli.hpp"

int main(int argc, char** argv) { return leibniz::cli::run(argc, argv); }
