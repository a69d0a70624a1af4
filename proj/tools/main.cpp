#include "cyl/cli.hpp"

int main(int argc, char** argv) { return cyl::run_main(argc, argv); }
