#include "coneangle/cli.hpp"

int main(int argc, char** argv) { return coneangle::cli::run(argc, argv); }
