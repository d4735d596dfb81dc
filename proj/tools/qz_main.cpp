#include <iostream>

int main() {
  std::cerr << "not wired up yet\n";
  return 2;
}
