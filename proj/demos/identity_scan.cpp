// Checks p(n) = sum_{m=1}^{n^2-1} |B(m,n)| + 1 for n = 1..12 and prints the
// per-m breakdown for n = 5.

#include <iostream>

#include "partlab/partlab.hpp"

using namespace partlab;

int main() {
    for (const auto& r : verify_range(12)) {
        std::cout << "n=" << r.n << "  p(n)=" << r.lhs << "  theorem=" << r.rhs
                  << "  " << (r.match ? "ok" : "MISMATCH") << "\n";
    }

    const auto r5 = p_via_main_theorem(5);
    std::cout << "\nn=5 contributions:";
    for (const auto& [m, count] : r5.per_m)
        std::cout << "  m=" << m << " (" << count << ")";
    std::cout << "\n";
    return 0;
}
