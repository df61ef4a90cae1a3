// CLI entry point; the command surface lives in io.cpp.
#include <cstdio>

int main() {
  std::puts("povm-duel: not wired yet");
  return 0;
}
