#include "cli.hpp"

int main(int argc, char** argv) { return dqc::cli::run_main(argc, argv); }
