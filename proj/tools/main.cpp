#include "cli_app.hpp"

int main(int argc, char** argv) { return srlq::cli::run(argc, argv); }
