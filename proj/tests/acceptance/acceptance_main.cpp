// placeholder; replaced by the full acceptance suite
#include <iostream>
int main() {
    std::cout << "[SKIP] acceptance suite not yet wired\n";
    return 1;
}
