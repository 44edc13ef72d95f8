#include <cstdio>

namespace mmp3 {

// placeholder dispatcher; the subcommand table is filled in as the pipeline
// stages become available.
int cli_main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "mmp3: no subcommands wired up yet\n");
  return 1;
}

}  // namespace mmp3
