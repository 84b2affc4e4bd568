#include "msvc/cli.hpp"

int main(int argc, char** argv) { return msvc::run_cli(argc, argv); }
