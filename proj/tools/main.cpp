#include "matkern/cli.hpp"

int main(int argc, char** argv) { return matkern::cli_main(argc, argv); }
