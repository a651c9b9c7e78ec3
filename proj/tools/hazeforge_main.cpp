#include <cstdio>

int main() {
  std::puts("hazeforge: placeholder");
  return 0;
}
