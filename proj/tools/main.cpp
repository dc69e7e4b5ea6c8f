#include "bdvd/cli.hpp"

int main(int argc, char** argv) { return bdvd::cli::run(argc, argv); }
