#include "cli.hpp"

int main(int argc, char** argv) { return nqs::cli::dispatch(argc, argv); }
