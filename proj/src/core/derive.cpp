#include "core/derive.hpp"

#include "core/error.hpp"

namespace mbx::derive {

using exactalg::column_lattice_basis;
using exactalg::direct_power;
using exactalg::DirectSumResult;
using exactalg::factor_through;
using exactalg::hom_kernel;
using exactalg::IntMatrix;
using exactalg::lift_through;

namespace {

// Coordinate block of k_i^α inside A^(2m): α-major, i minor.
std::size_t block_index(std::size_t i, int alpha, std::size_t m) {
    return static_cast<std::size_t>(alpha) * m + (i - 1);
}

CubicalKernelResult kernel_from_equations(std::size_t m, const Hom& equations,
                                          const DirectSumResult& power) {
    exactalg::SubgroupResult k = hom_kernel(equations);
    CubicalKernelResult out{k.group, {}, k.inclusion};
    for (std::size_t i = 1; i <= m; ++i) {
        Hom k0 = power.projections[block_index(i, 0, m)].compose(k.inclusion);
        Hom k1 = power.projections[block_index(i, 1, m)].compose(k.inclusion);
        out.projections.push_back({k0, k1});
    }
    return out;
}

}  // namespace

CubicalKernelResult cubical_kernel(const std::vector<std::array<Hom, 2>>& faces) {
    if (faces.empty()) throw ShapeError("cubical_kernel: needs at least one face pair");
    const FgAbGroup& a = faces[0][0].source();
    const FgAbGroup& b = faces[0][0].target();
    std::size_t n = faces.size();
    for (const auto& pair : faces)
        for (const Hom& f : pair)
            if (!f.source().same_presentation(a) || !f.target().same_presentation(b))
                throw ShapeError("cubical_kernel: faces must share source and target");

    std::size_t m = n + 1;
    DirectSumResult power = direct_power(a, 2 * m);
    // equations f_i^ω k_j^α = f_{j-1}^α k_i^ω for 1 <= i < j <= n+1
    std::size_t eq_count = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) eq_count += 4;
    DirectSumResult eq_target = direct_power(b, eq_count);

    std::vector<Hom> rows;
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
            for (int w = 0; w < 2; ++w)
                for (int al = 0; al < 2; ++al) {
                    Hom lhs = faces[i - 1][w].compose(power.projections[block_index(j, al, m)]);
                    Hom rhs = faces[j - 2][al].compose(power.projections[block_index(i, w, m)]);
                    rows.push_back(lhs - rhs);
                }
    Hom equations = exactalg::tuple_hom(eq_target, rows);
    return kernel_from_equations(m, equations, power);
}

CubicalKernelResult kernel_pair(const Hom& f) {
    DirectSumResult power = direct_power(f.source(), 2);
    Hom diff = f.compose(power.projections[0]) - f.compose(power.projections[1]);
    return kernel_from_equations(1, diff, power);
}

Hom factor_into_kernel(const CubicalKernelResult& k,
                       const std::vector<std::array<Hom, 2>>& family) {
    std::size_t m = k.projections.size();
    if (family.size() != m) throw ShapeError("factor_into_kernel: family size mismatch");
    const FgAbGroup& a = k.projections[0][0].target();
    DirectSumResult power = direct_power(a, 2 * m);
    std::vector<Hom> comps(2 * m, family[0][0]);
    for (std::size_t i = 1; i <= m; ++i)
        for (int al = 0; al < 2; ++al) comps[block_index(i, al, m)] = family[i - 1][al];
    Hom tuple = exactalg::tuple_hom(power, comps);
    return factor_through(k.inclusion, tuple);
}

namespace {

struct Cover {
    FgAbGroup free;
    Hom onto;
};

Cover free_cover(const FgAbGroup& g, CoverOrder order) {
    std::size_t k = g.generators();
    FgAbGroup p = FgAbGroup::free_group(k);
    IntMatrix m(k, k);
    // column j is the image of basis element j: generator j, or reversed
    for (std::size_t j = 0; j < k; ++j) m.at(order == CoverOrder::canonical ? j : k - 1 - j, j) = 1;
    return {p, Hom(p, g, m)};
}

}  // namespace

Resolution build_resolution(const FgAbGroup& a, std::size_t dim_bound, CoverOrder order) {
    Cover c0 = free_cover(a, order);
    cubical::CubicalObject obj;
    obj.level = cubical::Level::precubical;
    obj.groups.push_back(c0.free);
    obj.face_maps.resize(dim_bound + 1);
    obj.degeneracy_maps.clear();
    obj.connection_maps.clear();

    std::vector<CubicalKernelResult> kernels;
    std::vector<Hom> covers;

    for (std::size_t m = 1; m <= dim_bound; ++m) {
        CubicalKernelResult k =
            (m == 1) ? kernel_pair(c0.onto) : cubical_kernel(obj.face_maps[m - 1]);
        Cover cm = free_cover(k.group, order);
        obj.groups.push_back(cm.free);
        for (std::size_t i = 1; i <= m; ++i)
            obj.face_maps[m].push_back({k.projections[i - 1][0].compose(cm.onto),
                                        k.projections[i - 1][1].compose(cm.onto)});
        kernels.push_back(std::move(k));
        covers.push_back(cm.onto);
    }
    return {a, {std::move(obj), a, c0.onto}, std::move(kernels), std::move(covers)};
}

Report validate_resolution(const Resolution& p) {
    Report r = cubical::validate_cubical(p.object, p.object.object.level);
    r.subject = "resolution of " + p.target.canonical_name();
    std::size_t D = p.object.object.dim_bound();
    for (std::size_t n = 0; n <= D; ++n) {
        const FgAbGroup& g = p.object.object.groups[n];
        if (!ProjectiveClass::contains(g) || g.relations().cols() != 0)
            r.fail("degree " + std::to_string(n), "P_n free");
    }
    if (!ProjectiveClass::is_epimorphism(p.object.augmentation)) r.fail("augmentation", "∂ onto");
    for (std::size_t n = 1; n <= D; ++n) {
        if (!ProjectiveClass::is_epimorphism(p.covers[n - 1]))
            r.fail("degree " + std::to_string(n), "e_n onto");
        for (std::size_t i = 1; i <= n; ++i)
            for (int al = 0; al < 2; ++al) {
                Hom expected = p.kernels[n - 1].projections[i - 1][al].compose(p.covers[n - 1]);
                if (!expected.equal_mod_target(p.object.object.face(n, i, al)))
                    r.fail("degree " + std::to_string(n), "∂_i^α = k_i^α e_n");
            }
    }
    // kernel compatibility equations (definitional; re-checked for safety)
    for (std::size_t n = 2; n <= D; ++n) {
        const auto& k = p.kernels[n - 1];
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                for (int w = 0; w < 2; ++w)
                    for (int al = 0; al < 2; ++al) {
                        Hom lhs = p.object.object.face(n - 1, i, w).compose(k.projections[j - 1][al]);
                        Hom rhs =
                            p.object.object.face(n - 1, j - 1, al).compose(k.projections[i - 1][w]);
                        if (!lhs.equal_mod_target(rhs))
                            r.fail("K_" + std::to_string(n), "cubical kernel compatibility");
                    }
    }
    return r;
}

cubical::CubicalMorphism comparison_lift(const Hom& f, const Resolution& p, const Resolution& q,
                                         const Int& twist) {
    std::size_t D = p.object.object.dim_bound();
    if (q.object.object.dim_bound() != D)
        throw ShapeError("comparison_lift: dim bounds disagree");
    std::vector<Hom> comps;
    comps.push_back(
        lift_through(q.object.augmentation, f.compose(p.object.augmentation), twist));
    for (std::size_t m = 1; m <= D; ++m) {
        std::vector<std::array<Hom, 2>> family;
        for (std::size_t i = 1; i <= m; ++i)
            family.push_back({comps[m - 1].compose(p.object.object.face(m, i, 0)),
                              comps[m - 1].compose(p.object.object.face(m, i, 1))});
        Hom phi = factor_into_kernel(q.kernels[m - 1], family);
        comps.push_back(lift_through(q.covers[m - 1], phi));
    }
    return {p.object.object, q.object.object, std::move(comps)};
}

cubical::PrecubicalHomotopy comparison_homotopy(const cubical::CubicalMorphism& fbar,
                                                const cubical::CubicalMorphism& gbar,
                                                const Resolution& p, const Resolution& q) {
    std::size_t D = p.object.object.dim_bound();
    Hom f_aug = q.object.augmentation.compose(fbar.components[0]);
    Hom g_aug = q.object.augmentation.compose(gbar.components[0]);
    if (!f_aug.equal_mod_target(g_aug))
        throw StructureError("comparison_homotopy: the two lifts extend different morphisms");

    std::vector<Hom> h;
    for (std::size_t n = 0; n + 1 <= D; ++n) {
        std::vector<std::array<Hom, 2>> family;
        family.push_back({fbar.components[n], gbar.components[n]});
        for (std::size_t i = 2; i <= n + 1; ++i)
            family.push_back({h[n - 1].compose(p.object.object.face(n, i - 1, 0)),
                              h[n - 1].compose(p.object.object.face(n, i - 1, 1))});
        Hom qn = factor_into_kernel(q.kernels[n], family);
        h.push_back(lift_through(q.covers[n], qn));
    }
    return {fbar, gbar, std::move(h)};
}

void synth_degeneracies(Resolution& p) {
    cubical::CubicalObject& obj = p.object.object;
    std::size_t D = obj.dim_bound();
    obj.degeneracy_maps.assign(D + 1, {});
    if (D >= 1) {
        Hom id0 = Hom::identity(obj.groups[0]);
        Hom phi1 = factor_into_kernel(p.kernels[0], {{id0, id0}});
        obj.degeneracy_maps[1].push_back(lift_through(p.covers[0], phi1));
    }
    for (std::size_t n = 1; n + 1 <= D; ++n) {
        // s_j : P_n -> P_{n+1}, 1 <= j <= n+1
        for (std::size_t j = 1; j <= n + 1; ++j) {
            std::vector<std::array<Hom, 2>> family;
            for (std::size_t i = 1; i <= n + 1; ++i) {
                if (i == j) {
                    Hom id = Hom::identity(obj.groups[n]);
                    family.push_back({id, id});
                } else if (i < j) {
                    family.push_back({obj.degeneracy(n, j - 1).compose(obj.face(n, i, 0)),
                                      obj.degeneracy(n, j - 1).compose(obj.face(n, i, 1))});
                } else {
                    family.push_back({obj.degeneracy(n, j).compose(obj.face(n, i - 1, 0)),
                                      obj.degeneracy(n, j).compose(obj.face(n, i - 1, 1))});
                }
            }
            Hom phi = factor_into_kernel(p.kernels[n], family);
            obj.degeneracy_maps[n + 1].push_back(lift_through(p.covers[n], phi));
        }
    }
    obj.level = cubical::Level::pseudocubical;
}

void synth_connections(Resolution& p) {
    cubical::CubicalObject& obj = p.object.object;
    if (!obj.has_degeneracies()) throw StructureError("synth_connections: run synth_degeneracies first");
    std::size_t D = obj.dim_bound();
    obj.connection_maps.assign(D >= 2 ? D : 0, {});
    for (std::size_t n = 1; n + 1 <= D; ++n) {
        // Γ_j : P_n -> P_{n+1}, 1 <= j <= n
        for (std::size_t j = 1; j <= n; ++j) {
            std::vector<std::array<Hom, 2>> family;
            for (std::size_t i = 1; i <= n + 1; ++i) {
                if (i < j) {
                    family.push_back({obj.connection(n - 1, j - 1).compose(obj.face(n, i, 0)),
                                      obj.connection(n - 1, j - 1).compose(obj.face(n, i, 1))});
                } else if (i == j || i == j + 1) {
                    family.push_back({Hom::identity(obj.groups[n]),
                                      obj.degeneracy(n, j).compose(obj.face(n, j, 1))});
                } else {
                    family.push_back({obj.connection(n - 1, j).compose(obj.face(n, i - 1, 0)),
                                      obj.connection(n - 1, j).compose(obj.face(n, i - 1, 1))});
                }
            }
            Hom mu = factor_into_kernel(p.kernels[n], family);
            obj.connection_maps[n].push_back(lift_through(p.covers[n], mu));
        }
    }
    obj.level = cubical::Level::pcpc;
}

AdditiveFunctor AdditiveFunctor::identity() {
    return AdditiveFunctor(Kind::identity, FgAbGroup::trivial());
}
AdditiveFunctor AdditiveFunctor::tensor_with(FgAbGroup b) {
    return AdditiveFunctor(Kind::tensor_with, std::move(b));
}
AdditiveFunctor AdditiveFunctor::hom_from(FgAbGroup b) {
    return AdditiveFunctor(Kind::hom_from, std::move(b));
}

std::string AdditiveFunctor::name() const {
    switch (kind_) {
        case Kind::identity: return "identity";
        case Kind::tensor_with: return "tensor:" + b_.canonical_name();
        case Kind::hom_from: return "hom:" + b_.canonical_name();
    }
    return "?";
}

FgAbGroup AdditiveFunctor::on_group(const FgAbGroup& g) const {
    switch (kind_) {
        case Kind::identity: return g;
        case Kind::tensor_with: return exactalg::tensor_group(g, b_);
        case Kind::hom_from: return exactalg::hom_group(b_, g).group;
    }
    throw Error("bad functor kind");
}

Hom AdditiveFunctor::on_hom(const Hom& f) const {
    switch (kind_) {
        case Kind::identity: return f;
        case Kind::tensor_with: return exactalg::tensor_hom(f, Hom::identity(b_));
        case Kind::hom_from: {
            auto hg = exactalg::hom_group(b_, f.source());
            auto hg2 = exactalg::hom_group(b_, f.target());
            return exactalg::hom_group_induced(b_, f, hg, hg2);
        }
    }
    throw Error("bad functor kind");
}

cubical::CubicalObject apply_functor(const AdditiveFunctor& t, const cubical::CubicalObject& x) {
    return cubical::map_object(
        x, [&](const FgAbGroup& g) { return t.on_group(g); },
        [&](const Hom& f) { return t.on_hom(f); });
}

std::vector<FgAbGroup> derived_functors(const AdditiveFunctor& t, const FgAbGroup& a,
                                        std::size_t dim_bound, norm::Variant variant) {
    if (variant == norm::Variant::F) throw StructureError("derived_functors: variant must be N, M or C");
    Resolution res = build_resolution(a, dim_bound);
    if (variant == norm::Variant::M) {
        synth_degeneracies(res);
        synth_connections(res);
    }
    cubical::CubicalObject tp = apply_functor(t, res.object.object);
    norm::NormalizationResult nr = norm::normalize(tp, variant);
    std::vector<FgAbGroup> out;
    for (std::size_t n = 0; n + 1 <= dim_bound; ++n)
        out.push_back(chain::homology(nr.complex, n).group);
    return out;
}

FgAbGroup classical_derived(const AdditiveFunctor& t, const FgAbGroup& a, std::size_t n) {
    if (n >= 2) return FgAbGroup::trivial();
    IntMatrix lattice = column_lattice_basis(a.relations());
    FgAbGroup relations_free = FgAbGroup::free_group(lattice.cols());
    FgAbGroup gens_free = FgAbGroup::free_group(a.generators());
    Hom d1 = t.on_hom(Hom(relations_free, gens_free, lattice));
    if (n == 0) return exactalg::cokernel(d1).group;
    return hom_kernel(d1).group;
}

FgAbGroup tor_oracle(const FgAbGroup& a, const FgAbGroup& b, std::size_t n) {
    return classical_derived(AdditiveFunctor::tensor_with(b), a, n);
}

Report em_exact_check(const chain::AugmentedChainComplex& x) {
    Report r{"Eilenberg–Moore exactness"};
    std::size_t D = x.complex.dim_bound();
    if (!exactalg::is_surjective(x.augmentation)) r.fail("augmentation", "onto");
    for (std::size_t n = 0; n <= D; ++n)
        if (!x.complex.groups[n].is_free())
            r.fail("degree " + std::to_string(n), "degreewise 𝒫-membership (free)",
                   x.complex.groups[n].canonical_name());
    // exactness at degree 0 against the augmentation
    if (D >= 1) {
        auto z = hom_kernel(x.augmentation);
        Hom boundaries = factor_through(z.inclusion, x.complex.d(1));
        auto img = exactalg::hom_image(boundaries);
        auto q = exactalg::quotient(z.group, img.inclusion);
        if (!q.group.is_trivial())
            r.fail("degree 0", "ker ∂ = im d_1", q.group.canonical_name());
    }
    for (std::size_t n = 1; n + 1 <= D; ++n) {
        auto h = chain::homology(x.complex, n);
        if (!h.group.is_trivial())
            r.fail("degree " + std::to_string(n), "ker = im", h.group.canonical_name());
    }
    r.note("certified degrees 0.." + std::to_string(D == 0 ? 0 : D - 1));
    return r;
}

Report compare_with_classical(const FgAbGroup& b, const FgAbGroup& a, std::size_t dim_bound) {
    Report r{"Tor coincidence"};
    AdditiveFunctor t = AdditiveFunctor::tensor_with(b);
    Resolution res = build_resolution(a, dim_bound);
    synth_degeneracies(res);

    cubical::CubicalObject tp = apply_functor(t, res.object.object);
    auto tower_p = cubical::n_tower(res.object.object);
    auto tower_tp = cubical::n_tower(tp);
    norm::NormalizationResult np = norm::normalize(res.object.object, norm::Variant::N, tower_p);
    norm::NormalizationResult ntp = norm::normalize(tp, norm::Variant::N, tower_tp);

    for (std::size_t n = 0; n + 1 <= dim_bound; ++n) {
        FgAbGroup cub = chain::homology(ntp.complex, n).group;
        FgAbGroup cls = tor_oracle(a, b, n);
        if (cub.isomorphic(cls))
            r.note("degree " + std::to_string(n) + ": " + cub.canonical_name());
        else
            r.fail("degree " + std::to_string(n), "H_n(N(T(P))) = Tor_n",
                   cub.canonical_name() + " vs " + cls.canonical_name());
    }

    // key step of the proof: T(ν_n) is an isomorphism onto N_n(T(P))
    for (std::size_t n = 0; n <= dim_bound; ++n) {
        Hom t_nu = t.on_hom(np.inclusions[n]);
        try {
            Hom u = factor_through(ntp.inclusions[n], t_nu);
            if (!exactalg::is_injective(u) || !exactalg::is_surjective(u))
                r.fail("degree " + std::to_string(n), "T(ν_n) iso onto N_n(T(P))");
        } catch (const StructureError&) {
            r.fail("degree " + std::to_string(n), "T(ν_n) lands in N_n(T(P))");
        }
    }
    return r;
}

}  // namespace mbx::derive
