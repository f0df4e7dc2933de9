#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/chain.hpp"
#include "core/cubical.hpp"
#include "core/norm.hpp"
#include "core/report.hpp"

namespace mbx::derive {

using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::Int;

// The fixed projective class: finite-rank free abelian groups. For this
// class a hom is 𝒫-epimorphic iff surjective, and the class is closed under
// retracts.
struct ProjectiveClass {
    static bool contains(const FgAbGroup& g) { return g.is_free(); }
    static bool is_epimorphism(const Hom& f) { return exactalg::is_surjective(f); }
};

// Cubical kernel of a sequence of faces f_1^0..f_n^0, f_1^1..f_n^1 : A -> B:
// K with projections k_i^α : K -> A (1 <= i <= n+1) satisfying
// f_i^ω k_j^α = f_{j-1}^α k_i^ω for i < j, universal among such families.
// Realized as the kernel of A^(2n+2) -> B^(4·C(n+1,2)).
struct CubicalKernelResult {
    FgAbGroup group;
    std::vector<std::array<Hom, 2>> projections;  // projections[i-1] = {k_i^0, k_i^1}
    Hom inclusion;                                // K -> A^(2n+2), coordinate layout α-major
};

CubicalKernelResult cubical_kernel(const std::vector<std::array<Hom, 2>>& faces);
// Kernel pair of f (the degree-0 case of the factorization tower).
CubicalKernelResult kernel_pair(const Hom& f);
// Universal property: the unique h with k_i^α ∘ h = family[i-1][α].
Hom factor_into_kernel(const CubicalKernelResult& k,
                       const std::vector<std::array<Hom, 2>>& family);

// Order of the basis of each free cover; `reversed` yields an equally valid
// but different resolution (used to exercise the comparison theorem).
enum class CoverOrder { canonical, reversed };

// 𝒫-projective precubical resolution with its factorization data. Faces of
// P_n are k_i^α ∘ e_n by construction; synthesis fills in pseudodegeneracies
// and pseudoconnections and upgrades the level tag.
struct Resolution {
    FgAbGroup target;
    cubical::AugmentedCubicalObject object;
    std::vector<CubicalKernelResult> kernels;  // kernels[n-1] = K_n, n = 1..D
    std::vector<Hom> covers;                   // covers[n-1] = e_n : P_n -> K_n
};

Resolution build_resolution(const FgAbGroup& a, std::size_t dim_bound,
                            CoverOrder order = CoverOrder::canonical);

// 𝒫-projectivity, 𝒫-exactness, factorization identities, kernel
// compatibility, and the augmented precubical identities.
Report validate_resolution(const Resolution& p);

// Extends f : A -> A' to a precubical morphism between resolutions
// (comparison theorem, constructive). With twist != 0 the degree-0 lift is
// shifted by a kernel element, producing a different but equally valid lift.
cubical::CubicalMorphism comparison_lift(const Hom& f, const Resolution& p, const Resolution& q,
                                         const Int& twist = 0);

// Precubical homotopy between two lifts of the same morphism.
cubical::PrecubicalHomotopy comparison_homotopy(const cubical::CubicalMorphism& fbar,
                                                const cubical::CubicalMorphism& gbar,
                                                const Resolution& p, const Resolution& q);

// Pseudodegeneracies (upgrades level to pseudocubical), then
// pseudoconnections (upgrades to pcpc).
void synth_degeneracies(Resolution& p);
void synth_connections(Resolution& p);

class AdditiveFunctor {
public:
    enum class Kind { identity, tensor_with, hom_from };

    static AdditiveFunctor identity();
    static AdditiveFunctor tensor_with(FgAbGroup b);
    static AdditiveFunctor hom_from(FgAbGroup b);

    Kind kind() const { return kind_; }
    const FgAbGroup& argument() const { return b_; }
    std::string name() const;

    FgAbGroup on_group(const FgAbGroup& g) const;
    Hom on_hom(const Hom& f) const;

private:
    AdditiveFunctor(Kind k, FgAbGroup b) : kind_(k), b_(std::move(b)) {}
    Kind kind_;
    FgAbGroup b_;
};

cubical::CubicalObject apply_functor(const AdditiveFunctor& t, const cubical::CubicalObject& x);

// L_n T(A) via the requested normalization variant of T(P), certified
// degrees 0..D-1. Variant M synthesizes the pcpc structure first.
std::vector<FgAbGroup> derived_functors(const AdditiveFunctor& t, const FgAbGroup& a,
                                        std::size_t dim_bound, norm::Variant variant);

// Classical Eilenberg–Moore left derived functor values computed from the
// canonical two-term free resolution of a; zero for n >= 2. Independent of
// the cubical pipeline.
FgAbGroup classical_derived(const AdditiveFunctor& t, const FgAbGroup& a, std::size_t n);
FgAbGroup tor_oracle(const FgAbGroup& a, const FgAbGroup& b, std::size_t n);

// Plain exactness (= Eilenberg–Moore 𝒫-exactness for 𝒫 = frees): ker = im
// at every certified degree, surjective augmentation, and degreewise
// freeness of the complex groups.
Report em_exact_check(const chain::AugmentedChainComplex& x);

// Thm 4.4 instance: derived_functors(N) vs tor_oracle for T = ⊗b, plus the
// key step T(ν_n) : T(N_n(P)) ≅ N_n(T(P)).
Report compare_with_classical(const FgAbGroup& b, const FgAbGroup& a, std::size_t dim_bound);

}  // namespace mbx::derive
