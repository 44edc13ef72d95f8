#include <cstdio>

// batch CLI entry point; subcommand dispatch lives in cli_driver.cpp once the
// pipeline stages land.
namespace mmp3 {
int cli_main(int argc, char** argv);
}

int main(int argc, char** argv) { return mmp3::cli_main(argc, argv); }
