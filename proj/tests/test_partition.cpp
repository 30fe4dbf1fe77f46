#include <catch2/catch_amalgamated.hpp>

#include "symkernel/partition.hpp"

#include "oracles.hpp"

using namespace symkernel;

TEST_CASE("delta staircase") {
    CHECK(delta(1).parts()[0] == 0);

    const auto d2 = delta(2);
    CHECK(std::vector<int>(d2.parts().begin(), d2.parts().end()) == std::vector<int>{1, 0});

    const auto d4 = delta(4);
    CHECK(std::vector<int>(d4.parts().begin(), d4.parts().end()) ==
          std::vector<int>{3, 2, 1, 0});

    CHECK_THROWS_AS(delta(0), invalid_dimension_error);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), invalid_input_error);
    CHECK_THROWS_AS(Partition({2, -1}), invalid_input_error);
    CHECK_THROWS_AS(Partition(std::vector<int>{}), invalid_dimension_error);
    CHECK_THROWS_AS(StrictPartition({2, 2}), invalid_input_error);
    CHECK_NOTHROW(StrictPartition({3, 1, 0}));
}

TEST_CASE("strict partitions are exactly m + delta") {
    const Partition m({2, 1, 1});
    const auto p = StrictPartition::from_partition(m);
    CHECK(std::vector<int>(p.parts().begin(), p.parts().end()) == std::vector<int>{4, 2, 1});
    CHECK(p.to_partition() == m);
}

TEST_CASE("enumerate_partitions graded-lex order") {
    auto as_vectors = [](const std::vector<Partition>& ps) {
        std::vector<std::vector<int>> out;
        for (const auto& p : ps) out.emplace_back(p.parts().begin(), p.parts().end());
        return out;
    };

    CHECK(as_vectors(enumerate_partitions(2, 0)) ==
          std::vector<std::vector<int>>{{0, 0}});
    CHECK(as_vectors(enumerate_partitions(2, 2)) ==
          std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}, {2, 0}});
    CHECK(as_vectors(enumerate_partitions(3, 1)) ==
          std::vector<std::vector<int>>{{0, 0, 0}, {1, 0, 0}});

    for (int n = 1; n <= 3; ++n)
        for (int mw = 0; mw <= 6; ++mw)
            CHECK(as_vectors(enumerate_partitions(n, mw)) ==
                  oracle::enumerate_partitions_brute(n, mw));
}

TEST_CASE("orbit disjointness") {
    CHECK(orbit_disjointness(StrictPartition({2, 0}), StrictPartition({3, 1})));
    CHECK_FALSE(orbit_disjointness(StrictPartition({1, 0}), StrictPartition({1, 0})));
    CHECK(orbit_disjointness(StrictPartition({2, 1, 0}), StrictPartition({3, 1, 0})));
}

TEST_CASE("orbit disjointness iff labels differ, exhaustively") {
    for (int n = 2; n <= 4; ++n) {
        const auto parts = enumerate_strict_partitions(n, 6);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j)
                CHECK(orbit_disjointness(parts[i], parts[j]) == (i != j));
    }
}

TEST_CASE("permutation sign matches parity of transposition count") {
    int count = 0;
    for_each_permutation(3, [&](std::span<const int>, int sign) {
        CHECK((sign == 1 || sign == -1));
        ++count;
    });
    CHECK(count == 6);

    CHECK(permutation_sign(std::vector<int>{0, 1, 2}) == 1);
    CHECK(permutation_sign(std::vector<int>{1, 0, 2}) == -1);
    CHECK(permutation_sign(std::vector<int>{2, 0, 1}) == 1);
}
