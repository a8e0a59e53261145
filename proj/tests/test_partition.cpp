#include <catch2/catch_amalgamated.hpp>

#include "partlab/partition.hpp"

#include "support/oracles.hpp"

using namespace partlab;

namespace {
Partition P(std::initializer_list<Int> parts) { return Partition{parts}; }
}  // namespace

TEST_CASE("partitions of 5 in reverse-lexicographic order") {
    const auto got = enumerate_partitions(5);
    const std::vector<Partition> expected = {
        P({5}),          P({4, 1}),       P({3, 2}),    P({3, 1, 1}),
        P({2, 2, 1}),    P({2, 1, 1, 1}), P({1, 1, 1, 1, 1})};
    CHECK(got == expected);
}

TEST_CASE("partition edge cases") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(1) == std::vector<Partition>{P({1})});
    CHECK(Partition{}.weight() == 0);
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("partition validity") {
    CHECK(is_valid(P({6, 5, 2, 2})));
    CHECK(is_valid(Partition{}));
    CHECK_FALSE(is_valid(P({2, 3})));
    CHECK_FALSE(is_valid(P({1, 0})));
}

TEST_CASE("count oracle matches the reference values") {
    CHECK(count_partitions_oracle(0) == 1);
    CHECK(count_partitions_oracle(5) == 7);
    CHECK(count_partitions_oracle(21) == 792);
    for (std::size_t n = 0; n < testsupport::kPartitionCounts.size(); ++n)
        CHECK(count_partitions_oracle(static_cast<Int>(n)) ==
              testsupport::kPartitionCounts[n]);
}

TEST_CASE("enumeration agrees with the count oracle up to 40") {
    for (Int n = 0; n <= 40; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(static_cast<Int>(all.size()) == count_partitions_oracle(n));
        for (const auto& p : all) {
            CHECK(is_valid(p));
            CHECK(p.weight() == n);
        }
    }
}

TEST_CASE("enumeration order is deterministic") {
    CHECK(enumerate_partitions(17) == enumerate_partitions(17));
}

TEST_CASE("oracle overflow is reported, not wrapped") {
    CHECK_NOTHROW(count_partitions_oracle(300));
    CHECK_THROWS_AS(count_partitions_oracle(500), std::overflow_error);
}
