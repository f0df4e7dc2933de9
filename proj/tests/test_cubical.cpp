#include <doctest.h>

#include "core/cubical.hpp"
#include "core/cubset.hpp"

using namespace mbx;
using namespace mbx::cubical;
using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::IntMatrix;

TEST_CASE("constant cubical objects validate at level cc") {
    CubicalObject x = constant_cubical(FgAbGroup::cyclic(2), 3);
    CHECK(validate_cubical(x, Level::cc).passed());
    CHECK(validate_cubical(x, Level::pcpc).passed());
    CHECK(validate_cubical(x, Level::precubical).passed());

    CubicalObject zero = constant_cubical(FgAbGroup::trivial(), 2);
    CHECK(validate_cubical(zero, Level::cc).passed());
}

TEST_CASE("a broken face is located") {
    CubicalObject x = constant_cubical(FgAbGroup::cyclic(2), 3);
    x.face_maps[2][0][1] = Hom::zero(x.groups[2], x.groups[1]);
    Report r = validate_cubical(x, Level::cc);
    CHECK_FALSE(r.passed());
    bool found = false;
    for (const auto& v : r.violations)
        if (v.where.find("degree") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("linearized poset sets validate at level cc") {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto set = cubset::poset_cubical_set(cubset::antichain_poset(k), 3);
        CHECK(validate_cubical(cubset::linearize(set, FgAbGroup::free_group(1)), Level::cc).passed());
    }
    auto chain = cubset::poset_cubical_set(cubset::chain_poset(2), 3);
    CHECK(validate_cubical(cubset::linearize(chain, FgAbGroup::cyclic(4)), Level::cc).passed());
}

TEST_CASE("degeneracy images are honest sections") {
    auto set = cubset::poset_cubical_set(cubset::chain_poset(2), 3);
    CubicalObject x = cubset::linearize(set, FgAbGroup::free_group(1));
    for (std::size_t n = 1; n <= x.dim_bound(); ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (int a = 0; a < 2; ++a)
                CHECK(x.face(n, i, a)
                          .compose(x.degeneracy(n, i))
                          .equal_mod_target(Hom::identity(x.groups[n - 1])));
}

TEST_CASE("identity morphism and degenerate self-homotopy validate") {
    CubicalObject x = constant_cubical(FgAbGroup::cyclic(4), 3);
    CubicalMorphism id{x, x, {}};
    for (const auto& g : x.groups) id.components.push_back(Hom::identity(g));
    CHECK(validate_cubical_morphism(id, Level::cc).passed());

    // h_n = s_1 ∘ f_n is a precubical homotopy from f to f
    PrecubicalHomotopy h{id, id, {}};
    for (std::size_t n = 0; n + 1 <= x.dim_bound(); ++n)
        h.components.push_back(x.degeneracy(n + 1, 1).compose(id.components[n]));
    CHECK(validate_precubical_homotopy(h).passed());
}

TEST_CASE("n tower restricts the zero-faces") {
    auto set = cubset::poset_cubical_set(cubset::chain_poset(2), 3);
    CubicalObject x = cubset::linearize(set, FgAbGroup::free_group(1));
    NTower t = n_tower(x);
    for (std::size_t n = 1; n <= x.dim_bound(); ++n) {
        // inclusion kills the 1-faces
        for (std::size_t i = 1; i <= n; ++i)
            CHECK(x.face(n, i, 1).compose(t.sub[n].inclusion).is_zero_map());
        // restricted faces commute with the inclusions
        for (std::size_t i = 1; i <= n; ++i)
            CHECK(t.sub[n - 1]
                      .inclusion.compose(t.faces0[n][i - 1])
                      .equal_mod_target(x.face(n, i, 0).compose(t.sub[n].inclusion)));
    }
}
