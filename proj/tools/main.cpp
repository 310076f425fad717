#include "qrk/runner.hpp"

int main(int argc, char** argv) { return qrk::run_cli(argc, argv); }
