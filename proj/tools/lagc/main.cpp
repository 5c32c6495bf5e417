#include "cli.hpp"

int main(int argc, char** argv) { return lagc::cli::main_entry(argc, argv); }
