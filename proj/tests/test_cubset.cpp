#include <doctest.h>

#include "core/error.hpp"
#include "core/cubset.hpp"
#include "core/suite.hpp"

using namespace mbx;
using namespace mbx::cubset;
using exactalg::FgAbGroup;

TEST_CASE("poset construction") {
    Poset p = chain_poset(2);
    CHECK(p.leq[0][1]);
    CHECK_FALSE(p.leq[1][0]);
    CHECK_THROWS_AS(make_poset({"a", "b"}, {{0, 1}, {1, 0}}), StructureError);
}

TEST_CASE("cube counts match brute-force monotone map enumeration") {
    // chain 0<1: Dedekind counts 2, 3, 6, 20
    Poset two = chain_poset(2);
    std::vector<std::uint64_t> expect{2, 3, 6, 20};
    auto x = poset_cubical_set(two, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(count_monotone_maps_brute(two, n) == expect[n]);
        CHECK(x.count(n) == expect[n]);
    }

    // one-point poset: exactly one cube per degree
    auto pt = poset_cubical_set(antichain_poset(1), 3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(pt.count(n) == 1);

    // antichains admit only constant maps
    auto anti = poset_cubical_set(antichain_poset(2), 3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(anti.count(n) == 2);

    // all corpus posets agree with the brute-force count in low degrees
    for (const auto& p : suite::corpus_posets()) {
        auto set = poset_cubical_set(p, 2);
        for (std::size_t n = 0; n <= 2; ++n)
            CHECK(set.count(n) == count_monotone_maps_brute(p, n));
    }
}

TEST_CASE("poset cubical sets satisfy the cc identities pointwise") {
    for (const auto& p : suite::corpus_posets())
        CHECK(validate_cubical_set(poset_cubical_set(p, 3)).passed());
}

TEST_CASE("linearize is faithful on cubes") {
    auto set = poset_cubical_set(chain_poset(2), 2);
    auto x = linearize(set, FgAbGroup::free_group(1));
    // distinct cubes map to distinct basis vectors: structure matrices are
    // 0/1 with exactly one 1 per column
    for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (int a = 0; a < 2; ++a) {
                const auto& m = x.face(n, i, a).matrix();
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    int ones = 0;
                    for (std::size_t r = 0; r < m.rows(); ++r) {
                        CHECK((m.at(r, c) == 0 || m.at(r, c) == 1));
                        if (m.at(r, c) == 1) ++ones;
                    }
                    CHECK(ones == 1);
                }
            }
    // linearizing the point gives the constant object up to iso
    auto pt = linearize(poset_cubical_set(antichain_poset(1), 2), FgAbGroup::free_group(1));
    for (const auto& g : pt.groups) CHECK(g.free_rank() == 1);
    // the antichain gives Z^2 with identity faces
    auto anti = linearize(poset_cubical_set(antichain_poset(2), 2), FgAbGroup::free_group(1));
    for (const auto& g : anti.groups) CHECK(g.free_rank() == 2);
    for (std::size_t i = 1; i <= 2; ++i)
        for (int a = 0; a < 2; ++a) CHECK(anti.face(2, i, a).matrix().is_identity());
}
