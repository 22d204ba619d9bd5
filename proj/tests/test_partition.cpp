#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "macvogan/brute_oracle.hpp"
#include "macvogan/partition_fn.hpp"

using namespace macvogan;

namespace {

PartitionFn fn_of(const FieldParams& field,
                  std::vector<std::pair<CuspidalDatum, Partition>> entries) {
    return PartitionFn::make(field, std::move(entries));
}

CuspidalDatum deg1(const FieldParams& field, int64_t a) { return make_cuspidal(field, 1, a); }

} // namespace

TEST_CASE("partition dominance basics") {
    REQUIRE(dominance_leq(Partition{1, 1}, Partition{2}));
    REQUIRE_FALSE(dominance_leq(Partition{2}, Partition{1, 1}));
    REQUIRE(dominance_leq(Partition{2, 1}, Partition{3}));
    REQUIRE(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
    REQUIRE_FALSE(dominance_leq(Partition{2}, Partition{1, 1, 1}));  // sizes differ
    REQUIRE(dominance_geq(Partition{3}, Partition{1, 1, 1}));
    // incomparable pair of partitions of 6
    REQUIRE_FALSE(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    REQUIRE_FALSE(dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
}

TEST_CASE("dominance lower sets") {
    REQUIRE(dominance_lower_set(Partition{2}).size() == 2);
    REQUIRE(dominance_lower_set(Partition{3}).size() == 3);
    REQUIRE(dominance_lower_set(Partition{1}).size() == 1);
    REQUIRE(dominance_lower_set(Partition{2, 2}).size() == 3);  // (2,2),(2,1,1),(1^4)
}

TEST_CASE("degree on pinned examples") {
    auto f2 = FieldParams::make(2);
    REQUIRE(fn_of(f2, {{deg1(f2, 0), Partition{1, 1}}}).degree() == 2);
    REQUIRE(fn_of(f2, {}).degree() == 0);
    REQUIRE(fn_of(f2, {{make_cuspidal(f2, 2, 1), Partition{1}}}).degree() == 2);
}

TEST_CASE("partition function dominance on pinned examples") {
    auto f3 = FieldParams::make(3);
    auto a = fn_of(f3, {{deg1(f3, 0), Partition{1, 1}}});
    auto b = fn_of(f3, {{deg1(f3, 0), Partition{2}}});
    auto c = fn_of(f3, {{deg1(f3, 1), Partition{2}}});
    REQUIRE(dominance_leq(a, a));
    REQUIRE(dominance_leq(a, b));
    REQUIRE_FALSE(dominance_leq(b, a));
    REQUIRE_FALSE(dominance_leq(b, c));  // supports differ
    REQUIRE_FALSE(dominance_leq(c, b));
}

TEST_CASE("twist_fn on pinned examples") {
    auto f5 = FieldParams::make(5);
    auto m = fn_of(f5, {{deg1(f5, 0), Partition{1}}, {deg1(f5, 2), Partition{1}}});
    SECTION("trivial character") { REQUIRE(twist_fn(m, Residue(0, 4)) == m); }
    SECTION("support {0,2} shifted by 2 is itself") {
        REQUIRE(twist_fn(m, Residue(2, 4)) == m);
    }
    SECTION("support {0,2} shifted by 1 is {1,3}") {
        auto expected = fn_of(f5, {{deg1(f5, 1), Partition{1}}, {deg1(f5, 3), Partition{1}}});
        REQUIRE(twist_fn(m, Residue(1, 4)) == expected);
    }
}

TEST_CASE("stabilizer on pinned examples") {
    auto f5 = FieldParams::make(5);
    SECTION("q=5, support {0,2}: order 2 generated by b=2") {
        auto m = fn_of(f5, {{deg1(f5, 0), Partition{1}}, {deg1(f5, 2), Partition{1}}});
        auto stab = stabilizer(m);
        REQUIRE(stab.order() == 2);
        REQUIRE(stab.contains({2}));
        REQUIRE_FALSE(stab.contains({1}));
    }
    SECTION("single-support (1^N) has trivial stabilizer for q > 2") {
        for (int64_t q : {3, 5, 7}) {
            auto field = FieldParams::make(q);
            auto m = fn_of(field, {{deg1(field, 0), Partition{1, 1, 1}}});
            REQUIRE(stabilizer(m).order() == 1);
        }
    }
}

TEST_CASE("census counts on pinned examples") {
    REQUIRE(enumerate_degree(FieldParams::make(3), 2).size() == 8);
    REQUIRE(enumerate_degree(FieldParams::make(2), 2).size() == 3);
    REQUIRE(enumerate_degree(FieldParams::make(2), 1).size() == 1);
}

TEST_CASE("count_degree matches enumeration") {
    for (int64_t q : {2, 3, 4, 5}) {
        auto field = FieldParams::make(q);
        for (int64_t n = 1; n <= 4; ++n)
            REQUIRE(count_degree(field, n) ==
                    static_cast<int64_t>(enumerate_degree(field, n).size()));
    }
}

TEST_CASE("orbit census on pinned examples") {
    SECTION("q=3, N=2: sum of stabilizer orders is 7") {
        int64_t total = 0;
        for (const auto& [rep, stab] : orbits_and_stabilizers(FieldParams::make(3), 2))
            total += stab.order();
        REQUIRE(total == 7);
    }
    SECTION("q=2: every orbit is a singleton with trivial stabilizer") {
        for (int64_t n = 1; n <= 3; ++n) {
            auto orbits = orbits_and_stabilizers(FieldParams::make(2), n);
            REQUIRE(orbits.size() == enumerate_degree(FieldParams::make(2), n).size());
            for (const auto& [rep, stab] : orbits) REQUIRE(stab.order() == 1);
        }
    }
    SECTION("q=3, N=1: one orbit of size 2, trivial stabilizer") {
        auto orbits = orbits_and_stabilizers(FieldParams::make(3), 1);
        REQUIRE(orbits.size() == 1);
        REQUIRE(orbits[0].second.order() == 1);
    }
}

TEST_CASE("GL census equals brute-force conjugacy class count") {
    struct Pin {
        int n;
        int64_t q;
        int64_t classes;
    };
    for (auto [n, q, classes] :
         {Pin{1, 2, 1},  Pin{1, 3, 2},  Pin{1, 4, 3},  Pin{1, 5, 4},  Pin{1, 7, 6},
          Pin{2, 2, 3},  Pin{2, 3, 8},  Pin{2, 4, 15}, Pin{2, 5, 24}, Pin{2, 8, 63},
          Pin{2, 9, 80}, Pin{3, 2, 6},  Pin{3, 3, 24}, Pin{3, 4, 60}, Pin{4, 2, 14}}) {
        auto census = enumerate_degree(FieldParams::make(q), n);
        REQUIRE(static_cast<int64_t>(census.size()) == classes);
        REQUIRE(conj_class_count({MatrixKind::GL, n, q}) == classes);
    }
}

TEST_CASE("SL census equals brute-force conjugacy class count") {
    struct Pin {
        int n;
        int64_t q;
        int64_t classes;
    };
    for (auto [n, q, classes] :
         {Pin{2, 2, 3}, Pin{2, 3, 7}, Pin{2, 5, 9}, Pin{2, 8, 9}, Pin{2, 9, 13},
          Pin{3, 2, 6}, Pin{3, 3, 12}, Pin{3, 4, 28}, Pin{4, 2, 14}}) {
        int64_t total = 0;
        for (const auto& [rep, stab] : orbits_and_stabilizers(FieldParams::make(q), n))
            total += stab.order();
        REQUIRE(total == classes);
        REQUIRE(conj_class_count({MatrixKind::SL, n, q}) == classes);
    }
}

TEST_CASE("gcd(N, q-1) = 3 produces order-3 fiber splitting") {
    // SL_3(F_4): 60 GL labels collapse to 28 SL classes, some with Z/3 fibers
    auto orbits = orbits_and_stabilizers(FieldParams::make(4), 3);
    int64_t max_stab = 0, split_classes = 0;
    for (const auto& [rep, stab] : orbits) {
        max_stab = std::max(max_stab, stab.order());
        if (stab.order() == 3) ++split_classes;
    }
    REQUIRE(max_stab == 3);
    // 3*o1 + o3 = 60 labels and o1 + 3*o3 = 28 classes force o3 = 3
    REQUIRE(split_classes == 3);
    REQUIRE(static_cast<int64_t>(orbits.size()) == 22);
}

TEST_CASE("twist_fn is a degree-preserving group action") {
    std::mt19937_64 rng(31);
    for (int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        auto field = FieldParams::make(q);
        for (int64_t n = 1; n <= (q <= 5 ? 4 : 3); ++n) {
            auto census = enumerate_degree(field, n);
            for (int trial = 0; trial < 40; ++trial) {
                const auto& m = census[rng() % census.size()];
                Residue b1(static_cast<int64_t>(rng() % (q - 1)), q - 1);
                Residue b2(static_cast<int64_t>(rng() % (q - 1)), q - 1);
                REQUIRE(twist_fn(m, Residue(0, q - 1)) == m);
                REQUIRE(twist_fn(twist_fn(m, b1), b2) == twist_fn(m, b1 + b2));
                REQUIRE(twist_fn(m, b1).degree() == m.degree());
            }
        }
    }
}

TEST_CASE("stabilizer is exactly the fixing set") {
    std::mt19937_64 rng(37);
    for (int64_t q : {3, 5, 7}) {
        auto field = FieldParams::make(q);
        auto census = enumerate_degree(field, 3);
        for (int trial = 0; trial < 30; ++trial) {
            const auto& m = census[rng() % census.size()];
            auto stab = stabilizer(m);
            for (int64_t b = 0; b < q - 1; ++b)
                REQUIRE(stab.contains({b}) == (twist_fn(m, Residue(b, q - 1)) == m));
            REQUIRE(stab.rank() <= 1);  // subgroup of a cyclic group
        }
    }
}

TEST_CASE("dominance is a partial order on sampled functions") {
    std::mt19937_64 rng(41);
    auto field = FieldParams::make(3);
    auto census = enumerate_degree(field, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = census[rng() % census.size()];
        const auto& b = census[rng() % census.size()];
        const auto& c = census[rng() % census.size()];
        REQUIRE(dominance_leq(a, a));
        if (dominance_leq(a, b) && dominance_leq(b, a)) REQUIRE(a == b);
        if (dominance_leq(a, b) && dominance_leq(b, c)) REQUIRE(dominance_leq(a, c));
    }
}

TEST_CASE("partition function construction rejects bad input") {
    auto f3 = FieldParams::make(3);
    auto f5 = FieldParams::make(5);
    REQUIRE_THROWS_AS(fn_of(f3, {{deg1(f5, 0), Partition{1}}}), domain_error);
    REQUIRE_THROWS_AS(
        fn_of(f3, {{deg1(f3, 0), Partition{1}}, {deg1(f3, 0), Partition{2}}}),
        domain_error);
    // empty partitions are dropped, not stored
    REQUIRE(fn_of(f3, {{deg1(f3, 0), Partition{}}}).entries.empty());
}
