#include "commands.hpp"

int main(int argc, char **argv) { return zhmat::cli::run(argc, argv); }
