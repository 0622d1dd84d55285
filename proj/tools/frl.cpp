#include "frl/cli.hpp"

int main(int argc, char** argv) { return frl::dispatch(argc, argv); }
