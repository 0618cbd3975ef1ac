#include "lgw/cli.hpp"

int main(int argc, char** argv) { return lgw::cli::run_main(argc, argv); }
