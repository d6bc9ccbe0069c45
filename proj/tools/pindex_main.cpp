#include "pindex/commands.hpp"

int main(int argc, char** argv) { return pindex::run_cli(argc, argv); }
