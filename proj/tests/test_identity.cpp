#include <catch2/catch_amalgamated.hpp>

#include "partlab/identity.hpp"

#include "support/oracles.hpp"

using namespace partlab;

TEST_CASE("trivial case n = 1") {
    const auto r = p_via_main_theorem(1);
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.match);
    CHECK(r.per_m.empty());
}

TEST_CASE("n = 5 breakdown") {
    const auto r = p_via_main_theorem(5);
    CHECK(r.lhs == 7);
    CHECK(r.rhs == 7);
    CHECK(r.match);
    const std::map<Int, Int> expected = {{3, 1}, {8, 1}, {12, 1}, {15, 1}, {19, 1}, {24, 1}};
    CHECK(r.per_m == expected);
}

TEST_CASE("n = 21 agrees with the oracle") {
    const auto r = p_via_main_theorem(21);
    CHECK(r.lhs == 792);
    CHECK(r.match);
}

TEST_CASE("identity holds for n = 1..25") {
    for (const auto& r : verify_range(25)) {
        CHECK(r.match);
        CHECK(r.lhs == testsupport::kPartitionCounts[static_cast<std::size_t>(r.n)]);
        Int sum = 0;
        for (const auto& [m, count] : r.per_m) {
            CHECK(m <= r.n * r.n - 1);
            CHECK((m % 4 == 0 || m % 4 == 3));
            sum += count;
        }
        CHECK(sum + 1 == r.rhs);
        CHECK(sum == r.lhs - 1);
    }
}

TEST_CASE("report is independent of the job count") {
    const auto serial = p_via_main_theorem(18, 1);
    const auto parallel = p_via_main_theorem(18, 4);
    CHECK(serial.lhs == parallel.lhs);
    CHECK(serial.rhs == parallel.rhs);
    CHECK(serial.per_m == parallel.per_m);
}

TEST_CASE("B counts are monotone in n") {
    for (Int m : {3, 24, 48, 60, 72}) {
        Int prev = 0;
        for (Int n = 2; n <= 20; ++n) {
            const Int c = B_solutions(m, n).size();
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("structural chain for small n") {
    std::string diag;
    CHECK(structural_check(2, &diag));
    CHECK(structural_check(5, &diag));
    CHECK(structural_check(6, &diag));
    INFO(diag);
    for (Int n = 2; n <= 15; ++n) CHECK(structural_check(n));
}

TEST_CASE("structural check rejects n < 2") {
    CHECK_THROWS_AS(structural_check(1), std::invalid_argument);
}

TEST_CASE("image gaps") {
    CHECK(image_gaps(10) == std::vector<Int>{1, 2, 4, 5, 6, 7, 9, 10});
    CHECK(image_gaps(3) == std::vector<Int>{1, 2});
    const std::vector<Int> expected30 = {1,  2,  4,  5,  6,  7,  9,  10, 11, 13, 14,
                                         16, 17, 18, 20, 21, 22, 23, 25, 26, 29, 30};
    CHECK(image_gaps(30) == expected30);
}

TEST_CASE("gap list agrees with brute force up to 200") {
    std::vector<Int> brute;
    for (Int m = 1; m <= 200; ++m)
        if (testsupport::brute_force_frequency(m) == 0) brute.push_back(m);
    CHECK(image_gaps(200) == brute);
}
