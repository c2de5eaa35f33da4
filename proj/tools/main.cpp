#include "affcover/cli.hpp"

int main(int argc, char** argv) { return affcover::cli::run(argc, argv); }
