#include <doctest.h>

#include <map>

#include "core/error.hpp"
#include "core/homotopy.hpp"

using namespace mbx;
using namespace mbx::homotopy;
using exactalg::FgAbGroup;
using exactalg::Int;

namespace {

// Two vertices a, b, one nondegenerate edge a -> b plus a third vertex c
// and edge b -> c; squares are only the degenerate ones, so the composite
// square has no filler.
cubset::FiniteCubicalSet non_kan_set() {
    cubset::FiniteCubicalSet x;
    // degree 0: a b c ; degree 1: sa sb sc e(a->b) f(b->c)
    // degree 2: s1sa s1sb s1sc s1e s2e s1f s2f
    x.cube_names = {{"a", "b", "c"},
                    {"sa", "sb", "sc", "e", "f"},
                    {"s1sa", "s1sb", "s1sc", "s1e", "s2e", "s1f", "s2f"}};
    const std::uint32_t A = 0, B = 1, C = 2;
    const std::uint32_t SA = 0, SB = 1, SC = 2, E = 3, F = 4;
    x.faces.resize(3);
    x.degeneracies.resize(3);
    x.faces[1].resize(1);
    x.faces[1][0][0] = {A, B, C, A, B};  // ∂_1^0
    x.faces[1][0][1] = {A, B, C, B, C};  // ∂_1^1
    x.degeneracies[1] = {{SA, SB, SC}};
    // degree 2 faces by the ∂s identities
    x.faces[2].resize(2);
    // order: s1sa s1sb s1sc s1e s2e s1f s2f
    x.faces[2][0][0] = {SA, SB, SC, E, SA, F, SB};   // ∂_1^0
    x.faces[2][0][1] = {SA, SB, SC, E, SB, F, SC};   // ∂_1^1
    x.faces[2][1][0] = {SA, SB, SC, SA, E, SB, F};   // ∂_2^0
    x.faces[2][1][1] = {SA, SB, SC, SB, E, SC, F};   // ∂_2^1
    // s_1: sa,sb,sc,e,f -> s1sa,s1sb,s1sc,s1e,s1f ; s_2 uses s2e, s2f
    x.degeneracies[2] = {{0, 1, 2, 3, 5}, {0, 1, 2, 4, 6}};
    x.basepoint = 0;
    return x;
}

}  // namespace

TEST_CASE("the hand-built truncated set is a cubical set but not Kan") {
    auto x = non_kan_set();
    REQUIRE(cubset::validate_cubical_set(x).passed());
    Report r = kan_check(x, 2);
    CHECK_FALSE(r.passed());
    CHECK(kan_check(x, 1).passed());  // degenerate fillers handle degree 1
}

TEST_CASE("one-point cubical set is Kan with trivial homotopy") {
    auto pt = cubset::poset_cubical_set(cubset::antichain_poset(1), 3);
    CHECK(kan_check(pt, 3).passed());
    for (std::size_t n = 0; n <= 2; ++n) CHECK(pi(pt, n).class_count == 1);
}

TEST_CASE("constant Z/2 cubical group") {
    auto g = constant_group(FgAbGroup::cyclic(2), 3);
    REQUIRE(validate_cubical_group(g).passed());
    CHECK(kan_check(g.set, 3).passed());

    auto p0 = pi(g, 0);
    REQUIRE(p0.abelian_form);
    CHECK(p0.abelian_form->invariant_factors() == std::vector<Int>{2});
    CHECK(pi(g, 1).class_count == 1);
    CHECK(pi(g, 2).class_count == 1);

    auto mc = moore_group_complex(g);
    CHECK(mc.report.passed());
    CHECK(mc.m[0].size() == 2);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(mc.m[n].size() == 1);
    REQUIRE(mc.homology[0].abelian_form);
    CHECK(mc.homology[0].abelian_form->invariant_factors() == std::vector<Int>{2});

    for (std::size_t n = 0; n <= 2; ++n) CHECK(verify_pi_vs_moore(g, n).passed());
}

TEST_CASE("both displayed forms of the relation agree on corpus groups") {
    auto g = constant_group(FgAbGroup::cyclic(4), 3);
    for (std::size_t n = 0; n <= 2; ++n) {
        auto p = pi(g, n);
        auto last = pi_partition_last_column(g.set, n);
        REQUIRE(p.class_of.size() == last.size());
        // same partitions up to renaming
        std::map<std::uint32_t, std::uint32_t> fwd;
        bool same = true;
        for (std::size_t k = 0; k < last.size(); ++k) {
            auto it = fwd.find(p.class_of[k]);
            if (it == fwd.end())
                fwd[p.class_of[k]] = last[k];
            else if (it->second != last[k])
                same = false;
        }
        CHECK(same);
    }
}

TEST_CASE("linearized groups: homomorphism tables, Kan, pi vs Moore") {
    auto anti = cubset::poset_cubical_set(cubset::antichain_poset(2), 3);
    auto g = linearize_group(anti, FgAbGroup::cyclic(2));
    REQUIRE(validate_cubical_group(g).passed());
    CHECK(kan_check(g.set, 2).passed());
    for (std::size_t n = 0; n <= 2; ++n) CHECK(verify_pi_vs_moore(g, n).passed());

    // π_0 of the antichain over Z/2 is (Z/2)^2: two components, each Z/2
    auto p0 = pi(g, 0);
    REQUIRE(p0.abelian_form);
    CHECK(p0.abelian_form->isomorphic(FgAbGroup::from_invariants(0, {Int(2), Int(2)})));
}

TEST_CASE("abelian group object converts to a valid cubical object") {
    auto g = constant_group(FgAbGroup::cyclic(3), 2);
    auto obj = cubical_object_from_abelian_group(g);
    CHECK(cubical::validate_cubical(obj, cubical::Level::cc).passed());
    CHECK(obj.groups[0].isomorphic(FgAbGroup::cyclic(3)));
}

TEST_CASE("size caps are enforced") {
    auto chain3 = cubset::poset_cubical_set(cubset::chain_poset(2), 3);
    CHECK_THROWS_AS(linearize_group(chain3, FgAbGroup::cyclic(2), 1000), StructureError);
}
