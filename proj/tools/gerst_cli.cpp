#include "gerst/cli.hpp"

int main(int argc, char** argv) { return gerst::cli_main(argc, argv); }
