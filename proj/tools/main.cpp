#include "cli.hpp"

int main(int argc, char** argv) { return gvz::cli_main(argc, argv); }
