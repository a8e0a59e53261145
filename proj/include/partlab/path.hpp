#pragma once

#include <stdexcept>
#include <vector>

#include "partlab/common.hpp"
#include "partlab/matrix.hpp"

namespace partlab {

struct Point {
    Int x;
    Int y;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Staircase path from the line x + y = n_line down to the origin. The point
// sequence records every move, including zero-length ones (when some entry
// is 0 two consecutive points coincide); reduced() collapses those.
struct LatticePath {
    std::vector<Point> points;
    Int n_line;

    std::vector<Point> reduced() const {
        std::vector<Point> r;
        for (const Point& p : points)
            if (r.empty() || !(r.back() == p)) r.push_back(p);
        return r;
    }
};

// Partition into distinct odd parts, all >= 3, strictly decreasing. The
// empty partition (weight 0) is the image of single-column matrices.
struct OddPartition {
    std::vector<Int> parts;

    Int weight() const {
        Int s = 0;
        for (Int p : parts) s = checked_add(s, p);
        return s;
    }

    friend auto operator<=>(const OddPartition&, const OddPartition&) = default;
};

// Path attached to a matrix: start at Q = (sum of d's, sum of c's), then
// alternate leftward moves by d_s, d_{s-1}, ..., d_2 with downward moves by
// c_{s-1}, ..., c_1, and close with a leftward move by d_1 from (d_1, 0).
// Single-column matrices degenerate to (d_1, 0) -> (0, 0).
inline LatticePath matrix_to_path(const TwoLineMatrix& M) {
    require_valid(M);
    const std::size_t s = M.top.size();
    LatticePath path;
    if (s == 1) {
        path.points = {{M.bottom[0], 0}, {0, 0}};
        path.n_line = M.bottom[0];
        return path;
    }
    Int x = 0;
    for (Int d : M.bottom) x = checked_add(x, d);
    Int y = 0;
    for (std::size_t j = 0; j + 1 < s; ++j) y = checked_add(y, M.top[j]);
    path.n_line = checked_add(x, y);
    path.points.push_back({x, y});
    for (std::size_t k = s; k >= 2; --k) {
        x -= M.bottom[k - 1];
        path.points.push_back({x, y});
        y -= M.top[k - 2];
        path.points.push_back({x, y});
    }
    // here x = d_1 and y = 0
    path.points.push_back({0, 0});
    return path;
}

// Hook sizes read off the path after reflecting it through x + y = n, where
// n is the matrix entry sum. Block k (k = 1..s-1) contributes c_k parts
//   2(h_k - i) - 1,  i = 0..c_k-1,
// with h_1 = n - d_1 and h_{k+1} = h_k - c_k - d_{k+1}. The parts come out
// strictly decreasing, odd and >= 3.
inline OddPartition hooks(const TwoLineMatrix& M) {
    require_valid(M);
    const std::size_t s = M.top.size();
    OddPartition odd;
    if (s == 1) return odd;
    const Int n = ell(M);
    Int h = n - M.bottom[0];
    for (std::size_t k = 0; k + 1 < s; ++k) {
        const Int c_k = M.top[k];
        for (Int i = 0; i < c_k; ++i)
            odd.parts.push_back(checked_sub(checked_mul(2, h - i), 1));
        if (k + 2 < s) h = h - c_k - M.bottom[k + 1];
    }
    return odd;
}

// P(M): the number partitioned by hooks(M); 0 for single-column matrices.
inline Int weight_P(const TwoLineMatrix& M) { return hooks(M).weight(); }

}  // namespace partlab
