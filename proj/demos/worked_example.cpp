// End-to-end tour: a partition, its two-line matrix, the lattice path, the
// distinct-odd-part partition from the hooks, and the squared partition.

#include <iostream>

#include "partlab/partlab.hpp"

using namespace partlab;

namespace {
void show(const char* label, const TwoLineMatrix& m) {
    std::cout << label << ":\n";
    for (const auto* row : {&m.top, &m.bottom}) {
        std::cout << "  (";
        for (Int x : *row) std::cout << ' ' << x;
        std::cout << " )\n";
    }
}
}  // namespace

int main() {
    const Partition lambda{{2, 2, 1, 1}};
    const TwoLineMatrix m = partition_to_matrix(lambda);
    show("matrix of (2,2,1,1)", m);

    const LatticePath path = matrix_to_path(m);
    std::cout << "path:";
    for (const Point& pt : path.reduced())
        std::cout << " (" << pt.x << "," << pt.y << ")";
    std::cout << "\n";

    const OddPartition odd = hooks(m);
    std::cout << "hooks:";
    for (Int part : odd.parts) std::cout << ' ' << part;
    std::cout << "  ->  m = " << odd.weight() << "\n";

    const SquaredPartition sp = tsquared_from_matrix(m);
    std::cout << "squared: m = " << sp.m() << " = " << sp.b() << "^2 + 2*"
              << sp.a() << "\n\n";

    // two different matrices with the same hook weight
    const TwoLineMatrix a{{4, 1, 1, 0}, {0, 3, 0, 1}};
    const TwoLineMatrix b{{3, 3, 0}, {0, 0, 3}};
    std::cout << "P(A) = " << weight_P(a) << ", P(B) = " << weight_P(b)
              << "  (one value, two preimages; f(72) = " << frequency(72) << ")\n";
    return 0;
}
