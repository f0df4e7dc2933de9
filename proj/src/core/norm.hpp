#pragma once

#include <string>
#include <vector>

#include "core/chain.hpp"
#include "core/cubical.hpp"
#include "core/report.hpp"
#include "core/simplicial.hpp"

namespace mbx::norm {

using cubical::CubicalObject;
using exactalg::FgAbGroup;
using exactalg::Hom;

enum class Variant { N, M, C, F };
std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

// A normalization complex together with the per-degree embedding into X_n
// (identity for C).
struct NormalizationResult {
    chain::ChainComplex complex;
    std::vector<Hom> inclusions;
};

// N: kernels of the 1-faces, alternating 0-face differential.
// M: additionally kernels of the leading 0-faces, differential (-1)^{n+1}∂_n^0.
// C: unnormalized, differential Σ(-1)^i(∂_i^1-∂_i^0).
// F: subcomplex of N generated by the connection images, F_0 = F_1 = 0.
NormalizationResult normalize(const CubicalObject& x, Variant v);
NormalizationResult normalize(const CubicalObject& x, Variant v, const cubical::NTower& tower);

// Chain map induced degreewise by a precubical morphism (restriction for N
// and M, identity shape for C).
chain::ChainMap normalize_morphism(const cubical::CubicalMorphism& f, Variant v);

// Cubical Moore theorem data: i : M -> N with retraction and homotopy,
// obtained by transporting the simplicial Moore equivalence along
// hatI∘nbar = M, hatJ∘nbar = N (equalities of data, checked).
struct MooreEquivalence {
    NormalizationResult m, n;
    chain::ChainMap inclusion;   // M -> N
    chain::ChainMap retraction;  // N -> M, r∘i = id exactly
    chain::ChainHomotopy homotopy;  // from i∘r to id on N
};
MooreEquivalence moore_inclusion_equivalence(const CubicalObject& x);

// Checks M_n ∩ F_n = 0 and M_n + F_n = N_n for every degree, and that the
// composite M -> N -> N/F is a degreewise isomorphism commuting with the
// differentials.
Report splitting_check(const CubicalObject& x);

// σ_n = (id - s_1∂_1^1)···(id - s_n∂_n^1) with its factorization σ = ν∘τ
// through the N-inclusion; τ∘ν = id.
struct SigmaTau {
    Hom sigma, tau, nu;
};
SigmaTau sigma_tau(const CubicalObject& x, std::size_t n);
SigmaTau sigma_tau(const CubicalObject& x, std::size_t n, const cubical::NTower& tower);

// Chain homotopy t_n = (h_n - g_{n+1} s_1) ν_n between N(f) and N(g), for a
// precubical homotopy h from f to g out of a pseudocubical object.
chain::ChainHomotopy normalized_homotopy(const cubical::PrecubicalHomotopy& h);

}  // namespace mbx::norm
