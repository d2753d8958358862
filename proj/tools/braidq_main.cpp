#include "braidq/cli.hpp"

int main(int argc, char** argv) { return braidq::cli::run(argc, argv); }
