#pragma once

#include <string>
#include <vector>

#include "core/chain.hpp"
#include "core/cubical.hpp"
#include "core/fgab.hpp"
#include "core/report.hpp"

namespace mbx::simplicial {

using exactalg::FgAbGroup;
using exactalg::Hom;

enum class Level { presimplicial, pseudosimplicial, simplicial };

std::string level_name(Level l);
Level level_from_name(const std::string& s);

// Degree-bounded simplicial-shaped diagram: faces ∂_i : S_n -> S_{n-1}
// (0 <= i <= n), pseudodegeneracies s_i : S_n -> S_{n+1} (0 <= i <= n,
// keyed by source degree).
struct SimplicialObject {
    Level level = Level::presimplicial;
    std::vector<FgAbGroup> groups;
    std::vector<std::vector<Hom>> face_maps;        // face_maps[n][i], 1 <= n <= D
    std::vector<std::vector<Hom>> degeneracy_maps;  // degeneracy_maps[n][i], 0 <= n <= D-1

    std::size_t dim_bound() const { return groups.empty() ? 0 : groups.size() - 1; }
    const Hom& face(std::size_t n, std::size_t i) const { return face_maps.at(n).at(i); }
    const Hom& degeneracy(std::size_t n, std::size_t i) const {  // s_i : S_n -> S_{n+1}
        return degeneracy_maps.at(n).at(i);
    }
    bool has_degeneracies() const { return !degeneracy_maps.empty(); }
};

// The paper indexes these from -1; the augmentation target plays that role
// and object degrees are renumbered from 0.
struct AugmentedPseudoSimplicial {
    SimplicialObject object;
    FgAbGroup target;
    Hom augmentation;  // ε : S_0 -> target with ε∂_0 = ε∂_1
};

Report validate_simplicial(const SimplicialObject& s, Level level);
Report validate_simplicial(const AugmentedPseudoSimplicial& s, Level level);

// A chain complex carried by subgroups of the simplicial degrees, with the
// canonical inclusions.
struct NormalizedComplex {
    chain::ChainComplex complex;
    std::vector<Hom> inclusions;
};

// Moore normalization: I_n = ∩_{i=0..n-1} ker ∂_i, differential (-1)^n ∂_n.
NormalizedComplex moore_I(const SimplicialObject& s);
// Unnormalized chain complex: J_n = S_n, alternating-sum differential.
chain::ChainComplex unnormalized_J(const SimplicialObject& s);
// Inclusion I(s) ⊆ J(s) as a chain map.
chain::ChainMap moore_inclusion_map(const NormalizedComplex& i, const chain::ChainComplex& j);

// Shift-composed normalizations of an augmented object (degree 0 = target).
NormalizedComplex hat_I(const AugmentedPseudoSimplicial& s);
chain::ChainComplex hat_J(const AugmentedPseudoSimplicial& s);

// The bridge functor from pseudocubical objects with pseudoconnections:
// S_{-1} = X_0, S_n = ∩_{i=1..n+1} ker ∂_i^1, faces restricted 0-faces,
// pseudodegeneracies restricted connections.
AugmentedPseudoSimplicial nbar(const cubical::CubicalObject& x);
AugmentedPseudoSimplicial nbar(const cubical::CubicalObject& x, const cubical::NTower& tower);

// Constructive Moore theorem on hatI(s) ⊆ hatJ(s): retraction r with
// r∘i = id exactly and homotopy h with dh + hd = i∘r - id, built from the
// partial retractions id - s_t ∂_t iterated in ascending t.
struct MooreEquivalenceData {
    NormalizedComplex normalized;    // hatI with inclusions
    chain::ChainComplex ambient;     // hatJ
    chain::ChainMap inclusion;       // hatI -> hatJ
    chain::ChainMap retraction;      // hatJ -> hatI
    chain::ChainHomotopy homotopy;   // from i∘r to id on hatJ
};
MooreEquivalenceData simplicial_moore_equivalence(const AugmentedPseudoSimplicial& s);

}  // namespace mbx::simplicial
