#include <cstdio>

// end-to-end acceptance harness: one pass/fail line per criterion.
// criteria are added as the corresponding pipeline stages land; a criterion
// that cannot run yet reports FAIL rather than being skipped.
int main() {
  int failures = 0;
  for (int i = 1; i <= 10; ++i) {
    std::printf("criterion %2d: FAIL (not implemented)\n", i);
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
