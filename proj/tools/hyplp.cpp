// hyplp command-line tool (verify | optimize | constants | table).
// Full command implementations live in include/hyplp/cli.hpp.
#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "hyplp: not yet wired\n");
  return 2;
}
