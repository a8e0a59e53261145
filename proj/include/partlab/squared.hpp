#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partlab/common.hpp"
#include "partlab/matrix.hpp"
#include "partlab/path.hpp"

namespace partlab {

// Representation of m as b^2 + 2(c_1^2 + ... + c_t^2) with b = c_1 + ... + c_t
// and all c_i >= 1. The components coincide with the top-row entries
// c_1, ..., c_{s-1} of a d_1 = 0 matrix, which makes the three views (matrix,
// odd-part partition, squared partition) interchangeable.
struct SquaredPartition {
    std::vector<Int> components;  // weakly decreasing, all >= 1

    Int t() const { return static_cast<Int>(components.size()); }

    Int b() const {
        Int s = 0;
        for (Int c : components) s = checked_add(s, c);
        return s;
    }

    Int a() const {
        Int s = 0;
        for (Int c : components) s = checked_add(s, checked_mul(c, c));
        return s;
    }

    Int m() const {
        const Int bb = b();
        return checked_add(checked_mul(bb, bb), checked_mul(2, a()));
    }

    friend auto operator<=>(const SquaredPartition&, const SquaredPartition&) = default;
};

inline bool is_valid(const SquaredPartition& sp) {
    if (sp.components.empty()) return false;
    for (std::size_t i = 0; i < sp.components.size(); ++i) {
        if (sp.components[i] < 1) return false;
        if (i > 0 && sp.components[i - 1] < sp.components[i]) return false;
    }
    return true;
}

inline void require_valid(const SquaredPartition& sp) {
    if (!is_valid(sp))
        throw std::invalid_argument(
            "invalid squared partition: components must be positive and weakly decreasing");
}

// Canonical solutions of   b = x_1 + ... + x_b,  a = x_1^2 + ... + x_b^2
// over non-negative integers, each written weakly decreasing. The number of
// leading nonzero entries recovers t.
struct SystemSolutionSet {
    Int a = 0;
    Int b = 0;
    std::vector<std::vector<Int>> solutions;  // lexicographically descending

    Int size() const { return static_cast<Int>(solutions.size()); }
};

// Reads the squared partition off a d_1 = 0 matrix: the components are the
// top-row entries c_1, ..., c_{s-1}. Its m equals the hook sum P(M).
inline SquaredPartition tsquared_from_matrix(const TwoLineMatrix& M) {
    require_valid(M);
    if (M.bottom.front() != 0)
        throw std::invalid_argument("tsquared_from_matrix: matrix must have d_1 = 0");
    if (M.top.size() < 2)
        throw std::invalid_argument(
            "tsquared_from_matrix: single-column matrix has no squared partition");
    SquaredPartition sp;
    sp.components.assign(M.top.begin(), M.top.end() - 1);
    return sp;
}

// Inverse direction: top row (c_1, ..., c_t, 0), bottom row
// (0, c_1 - c_2, ..., c_{t-1} - c_t, c_t).
inline TwoLineMatrix matrix_from_tsquared(const SquaredPartition& sp) {
    require_valid(sp);
    const std::size_t t = sp.components.size();
    TwoLineMatrix M;
    M.top = sp.components;
    M.top.push_back(0);
    M.bottom.resize(t + 1);
    M.bottom[0] = 0;
    for (std::size_t i = 1; i < t; ++i)
        M.bottom[i] = sp.components[i - 1] - sp.components[i];
    M.bottom[t] = sp.components[t - 1];
    return M;
}

// All pairs (a, b) with m = b^2 + 2a that can possibly carry solutions:
// a, b >= 1, a = b (mod 2) and b^2 >= a >= b. The bounds are necessary for
// any solution, so filtering by them loses nothing and caps b at sqrt(m).
// Ordered by increasing b.
inline std::vector<std::pair<Int, Int>> decompositions(Int m) {
    if (m < 1) throw std::invalid_argument("decompositions: m must be >= 1");
    std::vector<std::pair<Int, Int>> out;
    for (Int b = 1; checked_add(checked_mul(b, b), 2 * b) <= m; ++b) {
        const Int r = m - b * b;
        if (r <= 0 || r % 2 != 0) continue;
        const Int a = r / 2;
        if (a % 2 != b % 2) continue;
        if (a < b || a > b * b) continue;
        out.emplace_back(a, b);
    }
    return out;
}

namespace detail {

// Depth-first enumeration over weakly decreasing prefixes. Branch values are
// tried in decreasing order; a branch is cut as soon as the remaining sum or
// sum of squares becomes unreachable for the suffix. The pruning products are
// taken in 128 bits so that large (a, b) pairs cannot wrap.
inline void solve_dfs(std::vector<Int>& prefix, Int rem_len, Int rem_sum,
                      Int rem_sq, Int hi,
                      std::vector<std::vector<Int>>& out) {
    using Wide = __int128;
    if (rem_len == 0) {
        if (rem_sum == 0 && rem_sq == 0) out.push_back(prefix);
        return;
    }
    if (rem_sum == 0) {  // the suffix is forced to zeros
        if (rem_sq == 0) {
            prefix.resize(prefix.size() + static_cast<std::size_t>(rem_len), 0);
            out.push_back(prefix);
            prefix.resize(prefix.size() - static_cast<std::size_t>(rem_len));
        }
        return;
    }
    if (Wide(rem_sum) > Wide(hi) * rem_len) return;  // even all-hi cannot reach the sum
    if (Wide(rem_sq) > Wide(hi) * rem_sum) return;   // sum of squares <= hi * sum
    if (Wide(rem_len) * rem_sq < Wide(rem_sum) * rem_sum) return;  // Cauchy-Schwarz
    if ((rem_sq - rem_sum) % 2 != 0) return;         // x^2 = x (mod 2)
    Int v = std::min(hi, rem_sum);
    const Int sq_cap = isqrt(rem_sq);
    if (v > sq_cap) v = sq_cap;
    for (; v >= 0; --v) {
        prefix.push_back(v);
        solve_dfs(prefix, rem_len - 1, rem_sum - v, rem_sq - v * v, v, out);
        prefix.pop_back();
    }
}

}  // namespace detail

// Enumerates every canonical solution of the system for the pair (a, b).
// Pairs outside the necessary bounds are rejected outright: a and b of
// opposite parity cannot occur because x^2 = x (mod 2) termwise; a < b fails
// because x^2 >= x for integers; a > b^2 fails because the square sum of
// non-negatives summing to b is at most b^2.
inline SystemSolutionSet solve_system(Int a, Int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("solve_system: a and b must be >= 1");
    if (a % 2 != b % 2)
        throw std::invalid_argument(
            "solve_system: a and b of opposite parity have no solutions (x^2 = x mod 2)");
    if (a < b)
        throw std::invalid_argument(
            "solve_system: a < b has no solutions (x^2 >= x termwise)");
    if (a > checked_mul(b, b))
        throw std::invalid_argument(
            "solve_system: a > b^2 has no solutions (square sum of a length-b "
            "tuple summing to b is at most b^2)");
    SystemSolutionSet set;
    set.a = a;
    set.b = b;
    std::vector<Int> prefix;
    prefix.reserve(static_cast<std::size_t>(b));
    detail::solve_dfs(prefix, b, b, a, b, set.solutions);
    return set;
}

// f(m): the number of canonical solutions across all decompositions of m,
// i.e. the number of d_1 = 0 matrices with P(M) = m.
inline Int frequency(Int m) {
    if (m < 1) throw std::invalid_argument("frequency: m must be >= 1");
    Int f = 0;
    for (const auto& [a, b] : decompositions(m))
        f = checked_add(f, solve_system(a, b).size());
    return f;
}

inline bool admits_tsquared(Int m) { return frequency(m) > 0; }

// The solutions of all systems for m, filtered to those with b + c_1 <= n.
// b + c_1 is the entry sum of the associated d_1 = 0 matrix, so the retained
// solutions are exactly the m-preimages inside matrices of entry sum <= n.
struct BSolutions {
    Int m = 0;
    Int n = 0;
    std::vector<SystemSolutionSet> by_decomposition;

    Int size() const {
        Int total = 0;
        for (const auto& set : by_decomposition)
            total = checked_add(total, set.size());
        return total;
    }
};

inline BSolutions B_solutions(Int m, Int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("B_solutions: m and n must be >= 1");
    BSolutions out;
    out.m = m;
    out.n = n;
    for (const auto& [a, b] : decompositions(m)) {
        SystemSolutionSet full = solve_system(a, b);
        SystemSolutionSet kept;
        kept.a = a;
        kept.b = b;
        for (auto& sol : full.solutions)
            if (checked_add(b, sol.front()) <= n) kept.solutions.push_back(std::move(sol));
        if (!kept.solutions.empty()) out.by_decomposition.push_back(std::move(kept));
    }
    return out;
}

}  // namespace partlab
