#include <catch2/catch_amalgamated.hpp>

#include "macvogan/brute_oracle.hpp"

using namespace macvogan;

TEST_CASE("field tables") {
    SECTION("q=2 is boolean arithmetic") {
        auto f = field_arithmetic(2);
        REQUIRE(f.addf(1, 1) == 0);
        REQUIRE(f.mulf(1, 1) == 1);
    }
    SECTION("q=4: x*x = x+1 under the chosen polynomial") {
        auto f = field_arithmetic(4);
        REQUIRE(f.mul.size() == 16);
        REQUIRE(f.poly == std::vector<int64_t>{1, 1});  // x^2 + x + 1
        REQUIRE(f.mulf(2, 2) == 3);
    }
    SECTION("q=9: 81-entry tables, units cyclic of order 8") {
        auto f = field_arithmetic(9);
        REQUIRE(f.mul.size() == 81);
        int64_t g = f.primitive, acc = g, ord = 1;
        while (acc != 1) {
            acc = f.mulf(static_cast<uint8_t>(acc), static_cast<uint8_t>(g));
            ++ord;
        }
        REQUIRE(ord == 8);
    }
    SECTION("non prime powers are rejected") {
        REQUIRE_THROWS_AS(field_arithmetic(6), domain_error);
        REQUIRE_THROWS_AS(field_arithmetic(10), domain_error);
    }
    SECTION("field axioms spot check over q=8") {
        auto f = field_arithmetic(8);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                REQUIRE(f.addf(a, b) == f.addf(b, a));
                REQUIRE(f.mulf(a, b) == f.mulf(b, a));
                if (a != 0) REQUIRE(f.mulf(a, f.inv[a]) == 1);
                for (int c = 0; c < 8; ++c)
                    REQUIRE(f.mulf(a, f.addf(b, c)) == f.addf(f.mulf(a, b), f.mulf(a, c)));
            }
    }
}

TEST_CASE("group element enumeration matches closed-form orders") {
    auto f2 = field_arithmetic(2);
    auto f3 = field_arithmetic(3);
    auto f4 = field_arithmetic(4);
    REQUIRE(matrix_group_elements({MatrixKind::GL, 2, 2}, f2).size() == 6);
    REQUIRE(matrix_group_elements({MatrixKind::GL, 2, 3}, f3).size() == 48);
    REQUIRE(matrix_group_elements({MatrixKind::SL, 2, 3}, f3).size() == 24);
    REQUIRE(matrix_group_elements({MatrixKind::SL, 2, 4}, f4).size() == 60);
    REQUIRE(matrix_group_elements({MatrixKind::GL, 3, 2}, f2).size() == 168);
    REQUIRE(matrix_group_order({MatrixKind::GL, 3, 3}) == 11232);
    REQUIRE(matrix_group_order({MatrixKind::SL, 3, 3}) == 5616);
}

TEST_CASE("conjugacy class counts on pinned examples") {
    REQUIRE(conj_class_count({MatrixKind::GL, 2, 2}) == 3);
    REQUIRE(conj_class_count({MatrixKind::SL, 2, 3}) == 7);
    REQUIRE(conj_class_count({MatrixKind::GL, 2, 3}) == 8);
}

TEST_CASE("conjugacy orbit sizes divide the group order") {
    for (auto spec : {MatrixGroupSpec{MatrixKind::GL, 2, 3}, MatrixGroupSpec{MatrixKind::SL, 2, 4},
                      MatrixGroupSpec{MatrixKind::GL, 3, 2}}) {
        int64_t order = matrix_group_order(spec);
        int64_t total = 0;
        for (int64_t s : conj_class_sizes(spec)) {
            REQUIRE(order % s == 0);
            total += s;
        }
        REQUIRE(total == order);
    }
}

TEST_CASE("budget guardrail is a hard error") {
    // GL_4(F_5) has order ~ 1.16e13, far past any desk budget
    REQUIRE_THROWS_AS(conj_class_count({MatrixKind::GL, 4, 5}), capacity_error);
}
