#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "partlab/common.hpp"
#include "partlab/matrix.hpp"
#include "partlab/partition.hpp"
#include "partlab/path.hpp"
#include "partlab/squared.hpp"

namespace partlab {

// Outcome of checking  p(n) = sum_{m=1}^{n^2-1} |B(m,n)| + 1  for one n:
// lhs is p(n) from the pentagonal-recurrence oracle, rhs the theorem side.
struct VerificationReport {
    Int n = 0;
    Int lhs = 0;
    Int rhs = 0;
    bool match = false;
    std::map<Int, Int> per_m;  // m -> |B(m,n)|, nonzero entries only
};

// Evaluates the identity at n. Only m = 0, 3 (mod 4) can contribute, so the
// sweep skips the other residues. The sweep parallelizes over m when
// jobs > 1; each m writes its own slot, so the report is identical for any
// job count.
inline VerificationReport p_via_main_theorem(Int n, int jobs = 1) {
    if (n < 1) throw std::invalid_argument("p_via_main_theorem: n must be >= 1");
    VerificationReport report;
    report.n = n;
    report.lhs = count_partitions_oracle(n);

    std::vector<Int> ms;
    const Int m_max = checked_sub(checked_mul(n, n), 1);
    for (Int m = 1; m <= m_max; ++m)
        if (m % 4 == 0 || m % 4 == 3) ms.push_back(m);

    std::vector<Int> counts(ms.size(), 0);
    detail::parallel_for(ms.size(), jobs, [&](std::size_t i) {
        counts[i] = B_solutions(ms[i], n).size();
    });

    Int total = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        total = checked_add(total, counts[i]);
        if (counts[i] != 0) report.per_m.emplace(ms[i], counts[i]);
    }
    report.rhs = checked_add(total, 1);
    report.match = (report.lhs == report.rhs);
    return report;
}

// Reports for n = 1..n_max. The whole range is always scanned; callers turn
// mismatches into a nonzero exit after seeing every report.
inline std::vector<VerificationReport> verify_range(Int n_max, int jobs = 1) {
    if (n_max < 1) throw std::invalid_argument("verify_range: n_max must be >= 1");
    std::vector<VerificationReport> reports;
    reports.reserve(static_cast<std::size_t>(n_max));
    for (Int n = 1; n <= n_max; ++n)
        reports.push_back(p_via_main_theorem(n, jobs));
    return reports;
}

// Walks the full chain for every partition of n with at least two parts:
//   partition -> d_1 = 0 matrix -> squared partition -> canonical tuple,
// checking that the tuple solves its system, lands in B(m, n) for
// m = P(matrix), that the hook weight agrees with b^2 + 2a, that the map is
// injective, and that the image size equals sum_m |B(m, n)|.
// On failure, *diagnostic names the witnessing partition and step.
inline bool structural_check(Int n, std::string* diagnostic = nullptr) {
    if (n < 2) throw std::invalid_argument("structural_check: n must be >= 2");
    const auto fail = [&](const Partition& p, const std::string& what) {
        if (diagnostic) {
            std::ostringstream os;
            os << "partition (";
            for (std::size_t i = 0; i < p.parts.size(); ++i)
                os << (i ? "," : "") << p.parts[i];
            os << "): " << what;
            *diagnostic = os.str();
        }
        return false;
    };

    std::set<std::vector<Int>> image;  // canonical tuples; length determines b
    Int chain_count = 0;
    for (const Partition& p : enumerate_partitions(n)) {
        if (p.parts.size() < 2) continue;
        const TwoLineMatrix M = project_to_M0(p, n);
        const SquaredPartition sp = tsquared_from_matrix(M);
        const Int m = weight_P(M);
        if (m != sp.m())
            return fail(p, "hook weight disagrees with b^2 + 2a");
        const Int b = sp.b();
        if (checked_add(b, sp.components.front()) != ell(M))
            return fail(p, "b + c_1 differs from the matrix entry sum");
        if (ell(M) > n)
            return fail(p, "matrix entry sum exceeds n");
        std::vector<Int> tuple = sp.components;
        tuple.resize(static_cast<std::size_t>(b), 0);
        const SystemSolutionSet set = solve_system(sp.a(), b);
        bool found = false;
        for (const auto& sol : set.solutions)
            if (sol == tuple) { found = true; break; }
        if (!found)
            return fail(p, "canonical tuple missing from its solution set");
        if (!image.insert(tuple).second)
            return fail(p, "chain maps two partitions to the same tuple");
        ++chain_count;
    }

    Int b_total = 0;
    const Int m_max = checked_sub(checked_mul(n, n), 1);
    for (Int m = 1; m <= m_max; ++m) {
        if (m % 4 == 1 || m % 4 == 2) continue;
        b_total = checked_add(b_total, B_solutions(m, n).size());
    }
    if (b_total != chain_count) {
        if (diagnostic)
            *diagnostic = "image size " + std::to_string(chain_count) +
                          " differs from sum of |B(m,n)| = " + std::to_string(b_total);
        return false;
    }
    return true;
}

// Every m <= limit with no preimage under the path procedure, ascending.
inline std::vector<Int> image_gaps(Int limit) {
    if (limit < 1) throw std::invalid_argument("image_gaps: limit must be >= 1");
    std::vector<Int> gaps;
    for (Int m = 1; m <= limit; ++m)
        if (frequency(m) == 0) gaps.push_back(m);
    return gaps;
}

}  // namespace partlab
