#include <doctest.h>

#include "core/cubset.hpp"
#include "core/norm.hpp"
#include "core/suite.hpp"

using namespace mbx;
using namespace mbx::norm;
using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::Int;
using exactalg::IntMatrix;

TEST_CASE("normalizations of the constant object") {
    FgAbGroup a = FgAbGroup::cyclic(2);
    auto x = cubical::constant_cubical(a, 3);

    auto n = normalize(x, Variant::N);
    auto m = normalize(x, Variant::M);
    CHECK(n.complex.groups[0].isomorphic(a));
    CHECK(m.complex.groups[0].isomorphic(a));
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(n.complex.groups[k].is_trivial());
        CHECK(m.complex.groups[k].is_trivial());
    }

    auto c = normalize(x, Variant::C);
    for (std::size_t k = 0; k <= 3; ++k) CHECK(c.complex.groups[k].isomorphic(a));
    for (std::size_t k = 1; k <= 3; ++k) CHECK(c.complex.d(k).matrix().is_zero());

    auto f = normalize(x, Variant::F);
    for (std::size_t k = 0; k <= 3; ++k) CHECK(f.complex.groups[k].is_trivial());
}

TEST_CASE("F vanishes in degrees 0 and 1 on every cc corpus object") {
    for (const auto& [name, x] : suite::corpus_cc_objects()) {
        CAPTURE(name);
        auto f = normalize(x, Variant::F);
        CHECK(f.complex.groups[0].is_trivial());
        CHECK(f.complex.groups[1].is_trivial());
        CHECK(chain::validate_complex(f.complex).passed());
    }
}

TEST_CASE("N homology of the linearized chain poset") {
    auto x = cubset::linearize(cubset::poset_cubical_set(cubset::chain_poset(2), 3),
                               FgAbGroup::free_group(1));
    auto n = normalize(x, Variant::N);
    CHECK(chain::validate_complex(n.complex).passed());
    CHECK(chain::homology(n.complex, 0).group.free_rank() == 1);
    CHECK(chain::homology(n.complex, 1).group.is_trivial());
    CHECK(chain::homology(n.complex, 2).group.is_trivial());
}

TEST_CASE("Moore inclusion equivalence on the corpus") {
    for (const auto& [name, x] : suite::corpus_cc_objects()) {
        CAPTURE(name);
        auto eq = moore_inclusion_equivalence(x);
        CHECK(chain::validate_chain_map(eq.inclusion).passed());
        CHECK(chain::validate_chain_map(eq.retraction).passed());
        CHECK(chain::validate_homotopy(eq.homotopy).passed());
        auto ri = chain::compose(eq.retraction, eq.inclusion);
        for (std::size_t k = 0; k < ri.components.size(); ++k)
            CHECK(ri.components[k].equal_mod_target(Hom::identity(eq.m.complex.groups[k])));
        for (std::size_t k = 0; k + 1 <= x.dim_bound(); ++k)
            CHECK(chain::homology(eq.m.complex, k)
                      .group.isomorphic(chain::homology(eq.n.complex, k).group));
    }
}

TEST_CASE("splitting N = M ⊕ F") {
    for (const auto& [name, x] : suite::corpus_cc_objects()) {
        CAPTURE(name);
        CHECK(splitting_check(x).passed());
    }
    // rank bookkeeping on the 6-cube degree of the chain poset
    auto x = cubset::linearize(cubset::poset_cubical_set(cubset::chain_poset(2), 3),
                               FgAbGroup::free_group(1));
    auto tower = cubical::n_tower(x);
    auto n = normalize(x, Variant::N, tower);
    auto m = normalize(x, Variant::M, tower);
    auto f = normalize(x, Variant::F, tower);
    CHECK(n.complex.groups[2].free_rank() ==
          m.complex.groups[2].free_rank() + f.complex.groups[2].free_rank());
}

TEST_CASE("sigma tau retraction") {
    auto x = cubset::linearize(cubset::poset_cubical_set(cubset::chain_poset(2), 3),
                               FgAbGroup::free_group(1));
    SUBCASE("degree 0 is trivial") {
        auto st = sigma_tau(x, 0);
        CHECK(st.sigma.matrix().is_identity());
        CHECK(st.tau.matrix().is_identity());
        CHECK(st.nu.matrix().is_identity());
    }
    SUBCASE("sigma kills the 1-faces and tau retracts nu") {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto st = sigma_tau(x, n);
            for (std::size_t j = 1; j <= n; ++j)
                CHECK(x.face(n, j, 1).compose(st.sigma).is_zero_map());
            CHECK(st.nu.compose(st.tau).equal_mod_target(st.sigma));
            CHECK(st.tau.compose(st.nu).equal_mod_target(Hom::identity(st.nu.source())));
        }
    }
    SUBCASE("constant object: sigma vanishes in positive degrees") {
        auto c = cubical::constant_cubical(FgAbGroup::cyclic(3), 2);
        for (std::size_t n = 1; n <= 2; ++n) {
            auto st = sigma_tau(c, n);
            CHECK(st.sigma.matrix().is_zero());
            CHECK(st.nu.source().is_trivial());
        }
    }
}

TEST_CASE("precubical homotopy maps to a chain homotopy on N (Prop 3.6 shape)") {
    auto x = cubset::linearize(cubset::poset_cubical_set(cubset::chain_poset(2), 3),
                               FgAbGroup::free_group(1));
    cubical::CubicalMorphism id{x, x, {}};
    for (const auto& g : x.groups) id.components.push_back(Hom::identity(g));
    cubical::PrecubicalHomotopy h{id, id, {}};
    for (std::size_t n = 0; n + 1 <= x.dim_bound(); ++n)
        h.components.push_back(x.degeneracy(n + 1, 1).compose(id.components[n]));
    REQUIRE(cubical::validate_precubical_homotopy(h).passed());

    chain::ChainHomotopy t = normalized_homotopy(h);
    CHECK(chain::validate_homotopy(t).passed());

    // the endpoints really are N(f) and N(g)
    auto nf = normalize_morphism(id, Variant::N);
    for (std::size_t n = 0; n < nf.components.size(); ++n)
        CHECK(t.from.components[n].equal_mod_target(nf.components[n]));
}

TEST_CASE("normalize is functorial") {
    auto x = cubset::linearize(cubset::poset_cubical_set(cubset::chain_poset(2), 2),
                               FgAbGroup::free_group(1));
    // endomorphism: multiplication by 3 in every degree commutes with all
    // structure maps
    cubical::CubicalMorphism f{x, x, {}};
    for (const auto& g : x.groups)
        f.components.push_back(Hom::identity(g).scaled(3));
    REQUIRE(cubical::validate_cubical_morphism(f, cubical::Level::cc).passed());
    auto nf = normalize_morphism(f, Variant::N);
    auto mf = normalize_morphism(f, Variant::M);
    CHECK(chain::validate_chain_map(nf).passed());
    CHECK(chain::validate_chain_map(mf).passed());
    // N(f) restricted to M equals M(f): compare through the inclusions
    auto tower = cubical::n_tower(x);
    auto m = normalize(x, Variant::M, tower);
    auto n = normalize(x, Variant::N, tower);
    for (std::size_t k = 0; k <= x.dim_bound(); ++k) {
        Hom m_in_n = exactalg::factor_through(n.inclusions[k], m.inclusions[k]);
        CHECK(m_in_n.compose(mf.components[k])
                  .equal_mod_target(nf.components[k].compose(m_in_n)));
    }
}
