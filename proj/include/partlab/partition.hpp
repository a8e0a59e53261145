#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "partlab/common.hpp"

namespace partlab {

// An unrestricted partition: a weakly decreasing sequence of positive
// integers. The empty sequence is the unique partition of 0.
struct Partition {
    std::vector<Int> parts;

    Int weight() const {
        Int s = 0;
        for (Int p : parts) s = checked_add(s, p);
        return s;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

inline bool is_valid(const Partition& p) {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] < 1) return false;
        if (i > 0 && p.parts[i - 1] < p.parts[i]) return false;
    }
    return true;
}

inline void require_valid(const Partition& p) {
    if (!is_valid(p))
        throw std::invalid_argument(
            "not a partition: parts must be positive and weakly decreasing");
}

// All partitions of n, in reverse-lexicographic order: (n) first, the
// all-ones partition last. n = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(Int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    std::vector<Int> cur{n};
    for (;;) {
        out.push_back(Partition{cur});
        // rightmost part > 1; if none, (1,...,1) was just emitted
        std::size_t k = cur.size();
        while (k > 0 && cur[k - 1] == 1) --k;
        if (k == 0) break;
        --k;
        Int rest = 0;
        for (std::size_t i = k; i < cur.size(); ++i) rest += cur[i];
        const Int v = cur[k] - 1;
        cur.resize(k);
        while (rest > 0) {
            const Int part = std::min(v, rest);
            cur.push_back(part);
            rest -= part;
        }
    }
    return out;
}

// p(n) by Euler's pentagonal-number recurrence:
//   p(n) = sum_{k>=1} (-1)^(k-1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
// Shares no code with enumerate_partitions, so the two act as independent
// checks on each other.
inline Int count_partitions_oracle(Int n) {
    if (n < 0) throw std::invalid_argument("count_partitions_oracle: n must be >= 0");
    std::vector<Int> table(static_cast<std::size_t>(n) + 1, 0);
    table[0] = 1;
    for (Int i = 1; i <= n; ++i) {
        Int acc = 0;
        for (Int k = 1;; ++k) {
            const Int g1 = k * (3 * k - 1) / 2;
            const Int g2 = k * (3 * k + 1) / 2;
            if (g1 > i && g2 > i) break;
            const bool plus = (k % 2 == 1);
            if (g1 <= i) {
                const Int t = table[static_cast<std::size_t>(i - g1)];
                acc = plus ? checked_add(acc, t) : checked_sub(acc, t);
            }
            if (g2 <= i) {
                const Int t = table[static_cast<std::size_t>(i - g2)];
                acc = plus ? checked_add(acc, t) : checked_sub(acc, t);
            }
        }
        table[static_cast<std::size_t>(i)] = acc;
    }
    return table[static_cast<std::size_t>(n)];
}

}  // namespace partlab
