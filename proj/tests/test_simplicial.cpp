#include <doctest.h>

#include "core/cubset.hpp"
#include "core/norm.hpp"
#include "core/simplicial.hpp"
#include "core/suite.hpp"

using namespace mbx;
using namespace mbx::simplicial;
using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::Int;

namespace {

SimplicialObject constant_simplicial(const FgAbGroup& a, std::size_t dim) {
    SimplicialObject s;
    s.level = Level::simplicial;
    s.groups.assign(dim + 1, a);
    s.face_maps.resize(dim + 1);
    s.degeneracy_maps.resize(dim);
    Hom id = Hom::identity(a);
    for (std::size_t n = 1; n <= dim; ++n) s.face_maps[n].assign(n + 1, id);
    for (std::size_t n = 0; n + 1 <= dim; ++n) s.degeneracy_maps[n].assign(n + 1, id);
    return s;
}

}  // namespace

TEST_CASE("validate simplicial levels") {
    SimplicialObject s = constant_simplicial(FgAbGroup::free_group(1), 3);
    CHECK(validate_simplicial(s, Level::simplicial).passed());
    CHECK(validate_simplicial(s, Level::presimplicial).passed());

    // break ∂_i s_j = id at i = j
    s.degeneracy_maps[1][0] = Hom::zero(s.groups[1], s.groups[2]);
    Report r = validate_simplicial(s, Level::pseudosimplicial);
    CHECK_FALSE(r.passed());
}

TEST_CASE("I and J of constant objects") {
    FgAbGroup z = FgAbGroup::free_group(1);
    SimplicialObject s = constant_simplicial(z, 3);
    auto i = moore_I(s);
    CHECK(chain::validate_complex(i.complex).passed());
    CHECK(i.complex.groups[0].isomorphic(z));
    for (std::size_t n = 1; n <= 3; ++n) CHECK(i.complex.groups[n].is_trivial());
    CHECK(chain::homology(i.complex, 0).group.isomorphic(z));

    auto j = unnormalized_J(s);
    CHECK(chain::validate_complex(j).passed());
    // differentials alternate 0, id, 0 on the constant object
    CHECK(j.d(1).matrix().is_zero());
    CHECK(j.d(2).matrix().is_identity());
    CHECK(j.d(3).matrix().is_zero());
    CHECK(chain::homology(j, 0).group.isomorphic(z));
    for (std::size_t n = 1; n + 1 <= 3; ++n) CHECK(chain::homology(j, n).group.is_trivial());

    // I(s) is a subcomplex of J(s)
    CHECK(chain::validate_chain_map(moore_inclusion_map(i, j)).passed());
}

TEST_CASE("nbar of the constant object collapses") {
    auto x = cubical::constant_cubical(FgAbGroup::cyclic(2), 3);
    auto aps = nbar(x);
    CHECK(aps.target.isomorphic(FgAbGroup::cyclic(2)));
    for (const auto& g : aps.object.groups) CHECK(g.is_trivial());
    CHECK(validate_simplicial(aps, Level::pseudosimplicial).passed());
}

TEST_CASE("hatI∘nbar = M and hatJ∘nbar = N as literal complexes") {
    for (const auto& [name, x] : suite::corpus_cc_objects()) {
        CAPTURE(name);
        auto tower = cubical::n_tower(x);
        auto aps = nbar(x, tower);
        CHECK(validate_simplicial(aps, Level::pseudosimplicial).passed());
        auto hi = hat_I(aps);
        auto hj = hat_J(aps);
        auto m = norm::normalize(x, norm::Variant::M, tower);
        auto n = norm::normalize(x, norm::Variant::N, tower);
        REQUIRE(hi.complex.groups.size() == m.complex.groups.size());
        REQUIRE(hj.groups.size() == n.complex.groups.size());
        for (std::size_t k = 0; k < m.complex.groups.size(); ++k) {
            CHECK(hi.complex.groups[k].same_presentation(m.complex.groups[k]));
            CHECK(hj.groups[k].same_presentation(n.complex.groups[k]));
        }
        for (std::size_t k = 0; k < m.complex.differentials.size(); ++k) {
            CHECK(hi.complex.differentials[k].matrix() == m.complex.differentials[k].matrix());
            CHECK(hj.differentials[k].matrix() == n.complex.differentials[k].matrix());
        }
    }
}

TEST_CASE("simplicial Moore equivalence") {
    for (const auto& [name, x] : suite::corpus_cc_objects()) {
        CAPTURE(name);
        auto aps = nbar(x);
        auto eq = simplicial_moore_equivalence(aps);
        CHECK(chain::validate_chain_map(eq.inclusion).passed());
        CHECK(chain::validate_chain_map(eq.retraction).passed());
        CHECK(chain::validate_homotopy(eq.homotopy).passed());
        auto ri = chain::compose(eq.retraction, eq.inclusion);
        for (std::size_t n = 0; n < ri.components.size(); ++n)
            CHECK(ri.components[n].equal_mod_target(
                Hom::identity(eq.normalized.complex.groups[n])));
        for (std::size_t n = 0; n + 1 <= eq.ambient.dim_bound(); ++n)
            CHECK(chain::homology(eq.ambient, n)
                      .group.isomorphic(chain::homology(eq.normalized.complex, n).group));
    }
}
