#include "huckel/cli.hpp"

int main(int argc, char** argv) { return huckel::run_main(argc, argv); }
