// CLI entry point; full command set lives in the scenario module.
#include <iostream>

int main() {
  std::cout << "depthlab: scenario runner not linked yet\n";
  return 2;
}
