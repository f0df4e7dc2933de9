#include "core/simplicial.hpp"

#include "core/error.hpp"

namespace mbx::simplicial {

using exactalg::factor_through;
using exactalg::intersect_kernels;
using exactalg::SubgroupResult;

std::string level_name(Level l) {
    switch (l) {
        case Level::presimplicial: return "presimplicial";
        case Level::pseudosimplicial: return "pseudosimplicial";
        case Level::simplicial: return "simplicial";
    }
    return "?";
}

Level level_from_name(const std::string& s) {
    if (s == "presimplicial") return Level::presimplicial;
    if (s == "pseudosimplicial") return Level::pseudosimplicial;
    if (s == "simplicial") return Level::simplicial;
    throw ParseError("unknown simplicial level: " + s);
}

namespace {

std::string pos(std::size_t n, std::size_t i, std::size_t j) {
    return "degree " + std::to_string(n) + ", i=" + std::to_string(i) + " j=" + std::to_string(j);
}

}  // namespace

Report validate_simplicial(const SimplicialObject& s, Level level) {
    Report r{"simplicial object (" + level_name(level) + ")"};
    std::size_t D = s.dim_bound();
    if (s.groups.empty()) {
        r.fail("shape", "degree 0 required");
        return r;
    }
    if (level != Level::presimplicial && !s.has_degeneracies() && D >= 1) {
        r.fail("structure", "degeneracies required for level " + level_name(level));
        return r;
    }
    for (std::size_t n = 1; n <= D; ++n) {
        if (s.face_maps.size() <= n || s.face_maps[n].size() != n + 1) {
            r.fail("degree " + std::to_string(n), "shape", "expected n+1 faces");
            return r;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            const Hom& f = s.face(n, i);
            if (!f.source().same_presentation(s.groups[n]) ||
                !f.target().same_presentation(s.groups[n - 1])) {
                r.fail(pos(n, i, 0), "face endpoints");
                return r;
            }
            if (!f.is_well_defined()) r.fail(pos(n, i, 0), "face well-defined");
        }
    }
    if (level != Level::presimplicial && s.has_degeneracies())
        for (std::size_t n = 0; n + 1 <= D; ++n) {
            if (s.degeneracy_maps.size() <= n || s.degeneracy_maps[n].size() != n + 1) {
                r.fail("degree " + std::to_string(n), "shape", "expected n+1 degeneracies");
                return r;
            }
            for (std::size_t i = 0; i <= n; ++i) {
                const Hom& d = s.degeneracy(n, i);
                if (!d.source().same_presentation(s.groups[n]) ||
                    !d.target().same_presentation(s.groups[n + 1])) {
                    r.fail(pos(n, i, 0), "degeneracy endpoints");
                    return r;
                }
                if (!d.is_well_defined()) r.fail(pos(n, i, 0), "degeneracy well-defined");
            }
        }

    // ∂_i ∂_j = ∂_{j-1} ∂_i, i < j
    for (std::size_t n = 2; n <= D; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                Hom lhs = s.face(n - 1, i).compose(s.face(n, j));
                Hom rhs = s.face(n - 1, j - 1).compose(s.face(n, i));
                if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, j), "∂∂ exchange");
            }

    if (level != Level::presimplicial)
        // ∂_i s_j on S_n: s_j : S_n -> S_{n+1}, ∂_i : S_{n+1} -> S_n
        for (std::size_t n = 0; n + 1 <= D; ++n)
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t i = 0; i <= n + 1; ++i) {
                    Hom lhs = s.face(n + 1, i).compose(s.degeneracy(n, j));
                    Hom rhs = Hom::identity(s.groups[n]);
                    if (i < j)
                        rhs = s.degeneracy(n - 1, j - 1).compose(s.face(n, i));
                    else if (i > j + 1)
                        rhs = s.degeneracy(n - 1, j).compose(s.face(n, i - 1));
                    if (!lhs.equal_mod_target(rhs)) r.fail(pos(n + 1, i, j), "∂s case split");
                }

    if (level == Level::simplicial)
        // s_i s_j = s_{j+1} s_i, i <= j
        for (std::size_t n = 0; n + 2 <= D; ++n)
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t i = 0; i <= j; ++i) {
                    Hom lhs = s.degeneracy(n + 1, i).compose(s.degeneracy(n, j));
                    Hom rhs = s.degeneracy(n + 1, j + 1).compose(s.degeneracy(n, i));
                    if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, j), "ss exchange");
                }
    return r;
}

Report validate_simplicial(const AugmentedPseudoSimplicial& s, Level level) {
    Report r = validate_simplicial(s.object, level);
    r.subject = "augmented " + r.subject;
    if (!s.augmentation.is_well_defined()) r.fail("augmentation", "well-defined");
    if (s.object.dim_bound() >= 1) {
        Hom lhs = s.augmentation.compose(s.object.face(1, 0));
        Hom rhs = s.augmentation.compose(s.object.face(1, 1));
        if (!lhs.equal_mod_target(rhs)) r.fail("degree 1", "ε∂_0 = ε∂_1");
    }
    return r;
}

namespace {

SubgroupResult normalized_part(const SimplicialObject& s, std::size_t n, std::size_t upto) {
    // ∩_{i=0..upto-1} ker ∂_i inside S_n
    std::vector<Hom> fs;
    for (std::size_t i = 0; i < upto; ++i) fs.push_back(s.face(n, i));
    return intersect_kernels(s.groups[n], fs);
}

}  // namespace

NormalizedComplex moore_I(const SimplicialObject& s) {
    std::size_t D = s.dim_bound();
    NormalizedComplex out;
    std::vector<SubgroupResult> subs;
    for (std::size_t n = 0; n <= D; ++n) subs.push_back(normalized_part(s, n, n));
    for (const auto& sg : subs) {
        out.complex.groups.push_back(sg.group);
        out.inclusions.push_back(sg.inclusion);
    }
    for (std::size_t n = 1; n <= D; ++n) {
        Hom restricted =
            factor_through(subs[n - 1].inclusion, s.face(n, n).compose(subs[n].inclusion));
        out.complex.differentials.push_back(n % 2 == 0 ? restricted : -restricted);
    }
    return out;
}

chain::ChainComplex unnormalized_J(const SimplicialObject& s) {
    chain::ChainComplex out;
    out.groups = s.groups;
    for (std::size_t n = 1; n <= s.dim_bound(); ++n) {
        Hom d = s.face(n, 0);
        for (std::size_t i = 1; i <= n; ++i) d = (i % 2 == 0) ? d + s.face(n, i) : d - s.face(n, i);
        out.differentials.push_back(d);
    }
    return out;
}

chain::ChainMap moore_inclusion_map(const NormalizedComplex& i, const chain::ChainComplex& j) {
    return {i.complex, j, i.inclusions};
}

NormalizedComplex hat_I(const AugmentedPseudoSimplicial& s) {
    NormalizedComplex inner = moore_I(s.object);
    NormalizedComplex out;
    out.complex.groups.push_back(s.target);
    out.inclusions.push_back(Hom::identity(s.target));
    for (std::size_t n = 0; n < inner.complex.groups.size(); ++n) {
        out.complex.groups.push_back(inner.complex.groups[n]);
        out.inclusions.push_back(inner.inclusions[n]);
    }
    out.complex.differentials.push_back(s.augmentation);  // I_0 = S_0 literally
    for (const auto& d : inner.complex.differentials) out.complex.differentials.push_back(d);
    return out;
}

chain::ChainComplex hat_J(const AugmentedPseudoSimplicial& s) {
    chain::ChainComplex inner = unnormalized_J(s.object);
    return chain::shift({inner, s.target, s.augmentation});
}

AugmentedPseudoSimplicial nbar(const cubical::CubicalObject& x) {
    return nbar(x, cubical::n_tower(x));
}

AugmentedPseudoSimplicial nbar(const cubical::CubicalObject& x, const cubical::NTower& tower) {
    if (!x.has_connections())
        throw StructureError("nbar: input needs pseudoconnections");
    std::size_t D = x.dim_bound();
    if (D < 1) throw StructureError("nbar: dim bound at least 1 required");

    SimplicialObject s;
    s.level = Level::pseudosimplicial;
    for (std::size_t m = 0; m + 1 <= D; ++m) s.groups.push_back(tower.sub[m + 1].group);

    s.face_maps.resize(s.groups.size());
    for (std::size_t m = 1; m < s.groups.size(); ++m)
        for (std::size_t i = 0; i <= m; ++i) s.face_maps[m].push_back(tower.faces0[m + 1][i]);

    s.degeneracy_maps.resize(s.groups.size() >= 1 ? s.groups.size() - 1 : 0);
    for (std::size_t m = 0; m + 1 < s.groups.size(); ++m)
        for (std::size_t j = 0; j <= m; ++j)
            s.degeneracy_maps[m].push_back(factor_through(
                tower.sub[m + 2].inclusion,
                x.connection(m + 1, j + 1).compose(tower.sub[m + 1].inclusion)));

    // ε = ∂_1^0 restricted to N_1 -> X_0
    return {std::move(s), x.groups[0], tower.faces0[1][0]};
}

MooreEquivalenceData simplicial_moore_equivalence(const AugmentedPseudoSimplicial& s) {
    if (!s.object.has_degeneracies() && s.object.dim_bound() >= 1)
        throw StructureError("simplicial Moore equivalence: pseudodegeneracies required");
    const SimplicialObject& S = s.object;
    std::size_t D = S.dim_bound();

    // Partial normalizations N^t_k = ∩_{i=0..min(t,k)-1} ker ∂_i. N^0 = J,
    // N^D = I degreewise.
    std::vector<std::vector<SubgroupResult>> nt(D + 1);
    for (std::size_t t = 0; t <= D; ++t)
        for (std::size_t k = 0; k <= D; ++k)
            nt[t].push_back(normalized_part(S, k, std::min(t, k)));

    // Partial retractions r_t : N^t -> N^{t+1}, identity on degrees <= t,
    // id - s_t ∂_t above.
    auto r_t = [&](std::size_t t, std::size_t k) -> Hom {
        if (t >= k)
            return Hom(nt[t][k].group, nt[t + 1][k].group,
                       exactalg::IntMatrix::identity(nt[t][k].group.generators()));
        Hom corrected = (Hom::identity(S.groups[k]) -
                         S.degeneracy(k - 1, t).compose(S.face(k, t)))
                            .compose(nt[t][k].inclusion);
        return factor_through(nt[t + 1][k].inclusion, corrected);
    };

    // R_t = r_{t-1} ∘ ... ∘ r_0 per degree; R_D is the retraction onto I.
    std::vector<std::vector<Hom>> big_r(D + 1);
    for (std::size_t k = 0; k <= D; ++k)
        big_r[0].push_back(Hom::identity(S.groups[k]));
    for (std::size_t t = 0; t < D; ++t)
        for (std::size_t k = 0; k <= D; ++k) big_r[t + 1].push_back(r_t(t, k).compose(big_r[t][k]));

    // Telescoped homotopy H_k = Σ_t (-1)^t s_t ∘ incl(N^t_k) ∘ R_t,k.
    std::vector<Hom> big_h;
    for (std::size_t k = 0; k + 1 <= D; ++k) {
        Hom acc = Hom::zero(S.groups[k], S.groups[k + 1]);
        for (std::size_t t = 0; t <= std::min(k, D - 1); ++t) {
            Hom term = S.degeneracy(k, t).compose(nt[t][k].inclusion).compose(big_r[t][k]);
            acc = (t % 2 == 0) ? acc + term : acc - term;
        }
        big_h.push_back(acc);
    }

    MooreEquivalenceData out{hat_I(s), hat_J(s), {}, {}, {}};

    out.inclusion = chain::ChainMap{out.normalized.complex, out.ambient, out.normalized.inclusions};

    std::vector<Hom> retr;
    retr.push_back(Hom::identity(s.target));
    for (std::size_t k = 0; k <= D; ++k)
        retr.push_back(Hom(out.ambient.groups[k + 1], out.normalized.complex.groups[k + 1],
                           big_r[D][k].matrix()));
    out.retraction = chain::ChainMap{out.ambient, out.normalized.complex, retr};

    chain::ChainMap ir = chain::compose(out.inclusion, out.retraction);
    std::vector<Hom> comps;
    comps.push_back(Hom::zero(s.target, out.ambient.groups[1]));
    for (std::size_t k = 0; k + 1 <= D; ++k) comps.push_back(-big_h[k]);
    out.homotopy = chain::ChainHomotopy{ir, chain::identity_chain_map(out.ambient), comps};
    return out;
}

}  // namespace mbx::simplicial
