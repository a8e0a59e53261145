#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "partlab/common.hpp"
#include "partlab/partition.hpp"

namespace partlab {

// Two-line matrix encoding of a partition:
//
//     ( c_1 c_2 ... c_s )      c_s = 0, d_s != 0, all entries >= 0,
//     ( d_1 d_2 ... d_s )      c_j = c_{j+1} + d_{j+1}  for j < s.
//
// Column sums recover the parts, e.g. (6,5,2,2) <-> top (5,2,2,0),
// bottom (1,3,0,2). The rows are stored separately because the defining
// constraints are row recurrences.
struct TwoLineMatrix {
    std::vector<Int> top;
    std::vector<Int> bottom;

    Int columns() const { return static_cast<Int>(top.size()); }

    friend auto operator<=>(const TwoLineMatrix&, const TwoLineMatrix&) = default;
};

struct Violation {
    enum class Rule {
        RowLengthMismatch,
        NoColumns,
        NegativeEntry,
        LastTopNonzero,   // c_s != 0
        LastBottomZero,   // d_s == 0
        ColumnRecurrence, // c_j != c_{j+1} + d_{j+1}
    };
    Rule rule;
    Int column;  // 1-based; 0 when the violation is not tied to a column
    std::string message;
};

// Checks every constraint and reports all violations, not just the first.
inline std::vector<Violation> validate(const TwoLineMatrix& M) {
    using Rule = Violation::Rule;
    std::vector<Violation> v;
    if (M.top.size() != M.bottom.size()) {
        v.push_back({Rule::RowLengthMismatch, 0,
                     "rows have different lengths (" +
                         std::to_string(M.top.size()) + " vs " +
                         std::to_string(M.bottom.size()) + ")"});
        return v;  // column-wise checks are meaningless from here on
    }
    const std::size_t s = M.top.size();
    if (s == 0) {
        v.push_back({Rule::NoColumns, 0, "matrix has no columns"});
        return v;
    }
    for (std::size_t j = 0; j < s; ++j) {
        if (M.top[j] < 0)
            v.push_back({Rule::NegativeEntry, static_cast<Int>(j + 1),
                         "column " + std::to_string(j + 1) + ": c is negative"});
        if (M.bottom[j] < 0)
            v.push_back({Rule::NegativeEntry, static_cast<Int>(j + 1),
                         "column " + std::to_string(j + 1) + ": d is negative"});
    }
    if (M.top[s - 1] != 0)
        v.push_back({Rule::LastTopNonzero, static_cast<Int>(s),
                     "c_s = " + std::to_string(M.top[s - 1]) + ", expected 0"});
    if (M.bottom[s - 1] == 0)
        v.push_back({Rule::LastBottomZero, static_cast<Int>(s), "d_s = 0"});
    for (std::size_t j = 0; j + 1 < s; ++j) {
        if (M.top[j] != M.top[j + 1] + M.bottom[j + 1])
            v.push_back({Rule::ColumnRecurrence, static_cast<Int>(j + 1),
                         "c_" + std::to_string(j + 1) +
                             " != c_" + std::to_string(j + 2) + " + d_" +
                             std::to_string(j + 2) + " (" +
                             std::to_string(M.top[j]) + " vs " +
                             std::to_string(M.top[j + 1] + M.bottom[j + 1]) + ")"});
    }
    return v;
}

inline bool is_valid(const TwoLineMatrix& M) { return validate(M).empty(); }

inline void require_valid(const TwoLineMatrix& M) {
    const auto v = validate(M);
    if (!v.empty())
        throw std::invalid_argument("invalid two-line matrix: " + v.front().message);
}

// Encodes a nonempty partition as the unique matrix with s = #parts:
// c_j = part[j+1] and d_j = part[j] - part[j+1] for j < s, c_s = 0,
// d_s = last part.
inline TwoLineMatrix partition_to_matrix(const Partition& p) {
    require_valid(p);
    if (p.parts.empty())
        throw std::invalid_argument("partition_to_matrix: empty partition has no matrix");
    const std::size_t s = p.parts.size();
    TwoLineMatrix M;
    M.top.resize(s);
    M.bottom.resize(s);
    for (std::size_t j = 0; j + 1 < s; ++j) {
        M.top[j] = p.parts[j + 1];
        M.bottom[j] = p.parts[j] - p.parts[j + 1];
    }
    M.top[s - 1] = 0;
    M.bottom[s - 1] = p.parts[s - 1];
    return M;
}

// Column sums. Weak decrease of the result follows from the constraints.
inline Partition matrix_to_partition(const TwoLineMatrix& M) {
    require_valid(M);
    Partition p;
    p.parts.resize(M.top.size());
    for (std::size_t j = 0; j < M.top.size(); ++j)
        p.parts[j] = checked_add(M.top[j], M.bottom[j]);
    return p;
}

// Sum of all entries; equals the weight of the encoded partition. Computed
// both directly and as (c_1 + d_1) + c_1 + ... + c_{s-1}; the two must agree.
inline Int ell(const TwoLineMatrix& M) {
    require_valid(M);
    Int direct = 0;
    for (Int c : M.top) direct = checked_add(direct, c);
    for (Int d : M.bottom) direct = checked_add(direct, d);
    Int folded = checked_add(M.top.front(), M.bottom.front());
    for (std::size_t j = 0; j + 1 < M.top.size(); ++j)
        folded = checked_add(folded, M.top[j]);
    if (direct != folded)
        throw std::logic_error("ell: entry sum and folded form disagree");
    return direct;
}

// The d_1 = 0 representative attached to a partition of n with at least two
// parts: the matrix of (p_2, p_2, p_3, ..., p_r). Its entry sum is
// n - (p_1 - p_2) <= n. Single-part partitions are rejected; they have no
// such representative.
inline TwoLineMatrix project_to_M0(const Partition& p, Int n) {
    require_valid(p);
    if (p.parts.size() < 2)
        throw std::invalid_argument(
            "project_to_M0: partition must have at least two parts");
    if (p.weight() != n)
        throw std::invalid_argument("project_to_M0: partition weight differs from n");
    Partition q = p;
    q.parts[0] = q.parts[1];
    return partition_to_matrix(q);
}

// Inverse of project_to_M0: a matrix with d_1 = 0 and entry sum <= n decodes
// to (u_2, u_2, u_3, ...); raising the first part by n - ell(M) restores the
// partition of n.
inline Partition lift_from_M0(const TwoLineMatrix& M, Int n) {
    require_valid(M);
    if (M.bottom.front() != 0)
        throw std::invalid_argument("lift_from_M0: matrix must have d_1 = 0");
    const Int l = ell(M);
    if (l > n)
        throw std::invalid_argument("lift_from_M0: entry sum exceeds n");
    Partition p = matrix_to_partition(M);
    p.parts[0] = checked_add(p.parts[0], n - l);
    return p;
}

}  // namespace partlab
