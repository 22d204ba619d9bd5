#include <catch2/catch_amalgamated.hpp>

#include "macvogan/brute_oracle.hpp"
#include "macvogan/sampling.hpp"
#include "macvogan/sl_correspondence.hpp"

using namespace macvogan;

TEST_CASE("mv_class_of on pinned examples") {
    SECTION("q=2: every label is its own class with trivial stabilizer") {
        auto f2 = FieldParams::make(2);
        for (const auto& m : enumerate_degree(f2, 3)) {
            auto c = mv_class_of(m);
            REQUIRE(c.representative == m);
            REQUIRE(c.stab.order() == 1);
        }
    }
    SECTION("q=3: twist to the minimum") {
        auto f3 = FieldParams::make(3);
        auto m = PartitionFn::make(f3, {{make_cuspidal(f3, 1, 1), Partition{2}}});
        auto c = mv_class_of(m);
        REQUIRE(c.representative ==
                PartitionFn::make(f3, {{make_cuspidal(f3, 1, 0), Partition{2}}}));
    }
    SECTION("q=5: symmetric support is its own representative with stab order 2") {
        auto f5 = FieldParams::make(5);
        auto m = PartitionFn::make(f5, {{make_cuspidal(f5, 1, 0), Partition{1}},
                                        {make_cuspidal(f5, 1, 2), Partition{1}}});
        auto c = mv_class_of(m);
        REQUIRE(c.representative == m);
        REQUIRE(c.stab.order() == 2);
    }
}

TEST_CASE("mv_fiber sizes on pinned examples") {
    SECTION("regular-cycle parameter: singleton fiber") {
        auto p = make_example1(FieldParams::make(3), 2);
        auto fiber = mv_fiber(mv_class_of(inertial_class(p)));
        REQUIRE(fiber.size() == 1);
    }
    SECTION("isotypic parameter: fiber of size e") {
        auto p = make_example2(FieldParams::make(5), 2, 2);
        REQUIRE(mv_fiber(mv_class_of(inertial_class(p))).size() == 2);
    }
    SECTION("q=2: all fibers singletons") {
        auto f2 = FieldParams::make(2);
        for (const auto& [rep, stab] : orbits_and_stabilizers(f2, 3))
            REQUIRE(mv_fiber(MVClass{rep, stab}).size() == 1);
    }
}

TEST_CASE("sl_census against the brute-force oracle") {
    REQUIRE(sl_census(FieldParams::make(3), 2) == 7);
    REQUIRE(sl_census(FieldParams::make(2), 2) == 3);
    REQUIRE(sl_census(FieldParams::make(5), 2) == conj_class_count({MatrixKind::SL, 2, 5}));
    REQUIRE(sl_census(FieldParams::make(5), 2) == 9);
}

TEST_CASE("sl_canonicalize on pinned examples") {
    auto f3 = FieldParams::make(3);
    SECTION("twist-equivalent inputs agree") {
        Sampler sampler(139);
        for (int trial = 0; trial < 60; ++trial) {
            auto p = sampler.tame_parameter(f3, sampler.uniform(1, 5));
            auto chi = sampler.tame_character(f3);
            REQUIRE(sl_canonicalize(p) == sl_canonicalize(twist_parameter(p, chi)));
        }
    }
    SECTION("determinism across runs") {
        auto p = make_example1(f3, 2);
        REQUIRE(sl_canonicalize(p) == sl_canonicalize(p));
        REQUIRE(sl_canonicalize(p).canonical == sl_canonicalize(sl_canonicalize(p).canonical).canonical);
    }
    SECTION("single block normalizes to a=0, u=0") {
        auto p = TameParameter::make(f3, {{make_cuspidal(f3, 1, 1), Phase(1, 2), 1}});
        auto c = sl_canonicalize(p);
        REQUIRE(c.canonical ==
                TameParameter::make(f3, {{make_cuspidal(f3, 1, 0), Phase(0, 1), 1}}));
    }
}

TEST_CASE("l_packet sizes on pinned examples") {
    SECTION("regular-cycle parameter: N labels") {
        for (auto [n, q] : std::vector<std::pair<int64_t, int64_t>>{{2, 3}, {3, 2}}) {
            auto c = sl_canonicalize(make_example1(FieldParams::make(q), n));
            REQUIRE(l_packet(c).size() == static_cast<std::size_t>(n));
        }
    }
    SECTION("isotypic parameter: a single label") {
        auto c = sl_canonicalize(make_example2(FieldParams::make(5), 2, 2));
        REQUIRE(l_packet(c).size() == 1);
    }
    SECTION("N=1: a single label") {
        auto f3 = FieldParams::make(3);
        auto c = sl_canonicalize(
            TameParameter::make(f3, {{make_cuspidal(f3, 1, 0), Phase(0, 1), 1}}));
        REQUIRE(l_packet(c).size() == 1);
    }
}

TEST_CASE("packet-level compatibility") {
    REQUIRE(check_compatibility_packet(make_example1(FieldParams::make(3), 2)));
    REQUIRE(check_compatibility_packet(make_example2(FieldParams::make(5), 2, 2)));
    Sampler sampler(149);
    for (int64_t q : {2, 3, 5, 7}) {
        auto field = FieldParams::make(q);
        for (int64_t n = 1; n <= 5; ++n)
            for (int trial = 0; trial < 40; ++trial)
                REQUIRE(check_compatibility_packet(sampler.tame_parameter(field, n)));
    }
}

TEST_CASE("hp_sl_packet is the class of the inertial label") {
    Sampler sampler(151);
    auto field = FieldParams::make(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = sampler.tame_parameter(field, sampler.uniform(1, 4));
        auto c = sl_canonicalize(p);
        REQUIRE(hp_sl_packet(c) == mv_class_of(inertial_class(c.canonical)));
    }
}

TEST_CASE("hp_sl_member on the two example families") {
    SECTION("regular-cycle family: only the trivial member receives the fiber") {
        auto c = sl_canonicalize(make_example1(FieldParams::make(3), 3));
        auto packet = dual_group(stab_full(c.canonical)).elements();
        REQUIRE(packet.size() == 3);
        int nonempty = 0;
        for (const auto& psi : packet) {
            auto members = hp_sl_member(c, psi);
            if (psi == IntVec(psi.size(), 0)) {
                REQUIRE(members.size() == 1);
                ++nonempty;
            } else {
                REQUIRE(members.empty());
            }
        }
        REQUIRE(nonempty == 1);
    }
    SECTION("isotypic family: the unique member receives all e labels") {
        auto c = sl_canonicalize(make_example2(FieldParams::make(5), 2, 2));
        auto packet = dual_group(stab_full(c.canonical)).elements();
        REQUIRE(packet.size() == 1);
        REQUIRE(hp_sl_member(c, packet[0]).size() == 2);
    }
    SECTION("N=1: trivial to trivial") {
        auto f3 = FieldParams::make(3);
        auto c = sl_canonicalize(
            TameParameter::make(f3, {{make_cuspidal(f3, 1, 0), Phase(0, 1), 1}}));
        auto members = hp_sl_member(c, IntVec{});
        REQUIRE(members.size() == 1);
    }
}

TEST_CASE("member heads partition the fiber") {
    REQUIRE(check_finalcomp(sl_canonicalize(make_example1(FieldParams::make(3), 2))));
    REQUIRE(check_finalcomp(sl_canonicalize(make_example2(FieldParams::make(5), 2, 2))));
    Sampler sampler(157);
    for (int64_t q : {2, 3, 5}) {
        auto field = FieldParams::make(q);
        for (int64_t n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 25; ++trial)
                REQUIRE(check_finalcomp(sl_canonicalize(sampler.tame_parameter(field, n))));
    }
}

TEST_CASE("fiber equals stabilizer order and orbit times stabilizer is q-1") {
    for (int64_t q : {2, 3, 5}) {
        auto field = FieldParams::make(q);
        for (const auto& [rep, stab] : orbits_and_stabilizers(field, 3)) {
            auto c = MVClass{rep, stab};
            REQUIRE(static_cast<int64_t>(mv_fiber(c).size()) == stab.order());
            // orbit length
            std::vector<PartitionFn> orbit;
            for (int64_t b = 0; b < q - 1; ++b)
                orbit.push_back(twist_fn(rep, Residue(b, q - 1)));
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            REQUIRE(static_cast<int64_t>(orbit.size()) * stab.order() == q - 1);
        }
    }
}

TEST_CASE("compound parameter with both component groups nontrivial") {
    // q=5, N=4: blocks on characters {0,2} x phases {0,1/2}. The full
    // stabilizer is Klein-four, the inertial one Z/2, and iota is onto with
    // kernel of order 2.
    auto f5 = FieldParams::make(5);
    std::vector<TameSegmentParam> blocks;
    for (int64_t a : {0, 2})
        for (int64_t k : {0, 1})
            blocks.push_back({make_cuspidal(f5, 1, a), Phase(k, 2), 1});
    auto p = TameParameter::make(f5, std::move(blocks));

    auto full = stab_full(p);
    REQUIRE(full.order() == 4);
    REQUIRE(full.invariant_factors() == IntVec{2, 2});
    auto inertial = stabilizer(inertial_class(p));
    REQUIRE(inertial.order() == 2);

    auto hom = iota(p);
    auto [ker, im] = hom_kernel_image(hom);
    REQUIRE(ker.order() == 2);
    REQUIRE(im.order() == 2);  // onto the inertial stabilizer

    // dual: injective, half the packet receives a head label
    auto hat = iota_hat(p);
    auto [hker, him] = hom_kernel_image(hat);
    REQUIRE(hker.order() == 1);
    REQUIRE(him.order() == 2);

    auto cls = sl_canonicalize(p);
    REQUIRE(l_packet(cls).size() == 4);
    REQUIRE(mv_fiber(hp_sl_packet(cls)).size() == 2);
    int64_t populated = 0, total_heads = 0;
    for (const auto& psi : dual_group(stab_full(cls.canonical)).elements()) {
        auto members = hp_sl_member(cls, psi);
        if (!members.empty()) ++populated;
        total_heads += static_cast<int64_t>(members.size());
    }
    REQUIRE(populated == 2);
    REQUIRE(total_heads == 2);
    REQUIRE(check_finalcomp(cls));
    REQUIRE(check_compatibility_packet(p));
}

TEST_CASE("base point relabeling translates member heads") {
    // iota-hat preimages satisfy hat^{-1}(psi * hat(t)) = t + hat^{-1}(psi)
    Sampler sampler(163);
    for (int64_t q : {3, 5, 7, 13}) {
        auto field = FieldParams::make(q);
        for (int trial = 0; trial < 25; ++trial) {
            auto p = sampler.tame_parameter(field, sampler.uniform(1, 4));
            auto hat = iota_hat(p);
            if (hat.source.order() > 24) continue;
            for (const auto& t : hat.source.elements()) {
                auto shift = hat.apply(t);
                for (const auto& psi : hat.target.elements()) {
                    auto base = hom_preimage_coset(hat, psi);
                    auto moved = hom_preimage_coset(hat, hat.target.add(psi, shift));
                    REQUIRE(base.has_value() == moved.has_value());
                    if (!base) continue;
                    auto expect = base->elements();
                    for (auto& x : expect) x = hat.source.add(x, t);
                    auto got = moved->elements();
                    std::sort(expect.begin(), expect.end());
                    std::sort(got.begin(), got.end());
                    REQUIRE(expect == got);
                }
            }
        }
    }
}
