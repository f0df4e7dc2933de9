#include "core/chain.hpp"

#include "core/error.hpp"

namespace mbx::chain {

using exactalg::factor_through;
using exactalg::hom_image;
using exactalg::hom_kernel;
using exactalg::IntMatrix;

namespace {

std::string deg(std::size_t n) { return "degree " + std::to_string(n); }

void check_shape(const ChainComplex& c) {
    if (c.groups.empty()) throw ShapeError("chain complex needs at least degree 0");
    if (c.differentials.size() + 1 != c.groups.size())
        throw ShapeError("chain complex: need exactly one differential per positive degree");
    for (std::size_t n = 1; n <= c.dim_bound(); ++n) {
        if (!c.d(n).source().same_presentation(c.groups[n]) ||
            !c.d(n).target().same_presentation(c.groups[n - 1]))
            throw ShapeError("chain complex: differential endpoints disagree at " + deg(n));
    }
}

}  // namespace

ChainComplex zero_complex(const std::vector<FgAbGroup>& groups) {
    ChainComplex c{groups, {}};
    for (std::size_t n = 1; n < groups.size(); ++n)
        c.differentials.push_back(Hom::zero(groups[n], groups[n - 1]));
    return c;
}

ChainMap identity_chain_map(const ChainComplex& c) {
    ChainMap f{c, c, {}};
    for (const auto& g : c.groups) f.components.push_back(Hom::identity(g));
    return f;
}

ChainMap compose(const ChainMap& outer, const ChainMap& inner) {
    if (outer.source.groups.size() != inner.target.groups.size())
        throw ShapeError("chain map compose: dim bounds disagree");
    ChainMap out{inner.source, outer.target, {}};
    for (std::size_t n = 0; n < inner.components.size(); ++n)
        out.components.push_back(outer.components[n].compose(inner.components[n]));
    return out;
}

Report validate_complex(const ChainComplex& c) {
    Report r{"chain complex"};
    check_shape(c);
    for (std::size_t n = 1; n <= c.dim_bound(); ++n)
        if (!c.d(n).is_well_defined()) r.fail(deg(n), "differential well-defined");
    for (std::size_t n = 1; n + 1 <= c.dim_bound(); ++n)
        if (!c.d(n).compose(c.d(n + 1)).is_zero_map())
            r.fail(deg(n + 1), "d∘d = 0", "composite into " + deg(n - 1) + " is nonzero");
    return r;
}

Report validate_complex(const AugmentedChainComplex& c) {
    Report r = validate_complex(c.complex);
    r.subject = "augmented chain complex";
    if (!c.augmentation.is_well_defined()) r.fail("augmentation", "well-defined");
    if (c.complex.dim_bound() >= 1 && !c.augmentation.compose(c.complex.d(1)).is_zero_map())
        r.fail("degree 1", "∂∘d1 = 0");
    return r;
}

Report validate_chain_map(const ChainMap& f) {
    Report r{"chain map"};
    if (f.source.groups.size() != f.target.groups.size())
        throw ShapeError("chain map: dim bounds disagree");
    if (f.components.size() != f.source.groups.size())
        throw ShapeError("chain map: one component per degree");
    for (std::size_t n = 0; n <= f.source.dim_bound(); ++n)
        if (!f.components[n].is_well_defined()) r.fail(deg(n), "component well-defined");
    for (std::size_t n = 1; n <= f.source.dim_bound(); ++n) {
        Hom lhs = f.components[n - 1].compose(f.source.d(n));
        Hom rhs = f.target.d(n).compose(f.components[n]);
        if (!lhs.equal_mod_target(rhs)) r.fail(deg(n), "f∘d = d∘f");
    }
    return r;
}

Report validate_homotopy(const ChainHomotopy& h) {
    Report r{"chain homotopy"};
    const ChainComplex& src = h.from.source;
    const ChainComplex& tgt = h.from.target;
    std::size_t top = src.dim_bound();
    if (h.components.size() != top) throw ShapeError("chain homotopy: needs components h_0..h_{D-1}");
    for (std::size_t n = 0; n + 1 <= top; ++n) {
        // d_{n+1} h_n + h_{n-1} d_n = f_n - g_n
        Hom lhs = tgt.d(n + 1).compose(h.components[n]);
        if (n >= 1) lhs = lhs + h.components[n - 1].compose(src.d(n));
        Hom rhs = h.from.components[n] - h.to.components[n];
        if (!lhs.equal_mod_target(rhs)) r.fail(deg(n), "dh + hd = f - g");
    }
    return r;
}

SubgroupResult cycles(const ChainComplex& c, std::size_t n) {
    if (n > c.dim_bound()) throw ShapeError("cycles: degree out of range");
    if (n == 0) return {c.groups[0], Hom::identity(c.groups[0])};
    return hom_kernel(c.d(n));
}

HomologyPresentation homology_presentation(const ChainComplex& c, std::size_t n) {
    if (n > c.dim_bound()) throw ShapeError("homology: degree out of range");
    SubgroupResult z = cycles(c, n);
    if (n == c.dim_bound()) {
        // no boundaries available: H_n is reported as ker d_n, uncertified
        return {z, z.group, Hom::identity(z.group), false};
    }
    // boundaries expressed in cycle coordinates
    Hom boundaries_in_z = factor_through(z.inclusion, c.d(n + 1));
    SubgroupResult img = hom_image(boundaries_in_z);
    auto q = exactalg::quotient(z.group, img.inclusion);
    return {z, q.group, q.projection, true};
}

HomologyResult homology(const ChainComplex& c, std::size_t n) {
    auto p = homology_presentation(c, n);
    return {p.group, p.certified};
}

Hom induced_on_homology(const ChainMap& f, std::size_t n) {
    auto hs = homology_presentation(f.source, n);
    auto ht = homology_presentation(f.target, n);
    // cycles map to cycles; push through f_n, rewrite in target cycle
    // coordinates, project.
    Hom moved = f.components[n].compose(hs.cycle.inclusion);
    Hom in_cycles = factor_through(ht.cycle.inclusion, moved);
    // H_n keeps the cycle generators, so the matrix transfers directly to
    // the quotient presentations.
    return Hom(hs.group, ht.group, ht.projection.compose(in_cycles).matrix());
}

ChainComplex shift(const AugmentedChainComplex& x) {
    ChainComplex out;
    out.groups.push_back(x.target);
    for (const auto& g : x.complex.groups) out.groups.push_back(g);
    out.differentials.push_back(x.augmentation);
    for (const auto& d : x.complex.differentials) out.differentials.push_back(d);
    return out;
}

}  // namespace mbx::chain
