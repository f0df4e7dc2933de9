#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/fgab.hpp"
#include "core/report.hpp"

namespace mbx::cubical {

using exactalg::FgAbGroup;
using exactalg::Hom;

// Structure levels, ordered by the identity sets they impose. pcpc =
// pseudocubical with pseudoconnections.
enum class Level { precubical, pseudocubical, pcpc, cubical, cc };

std::string level_name(Level l);
Level level_from_name(const std::string& s);
bool level_has_degeneracies(Level l);
bool level_has_connections(Level l);

// Degree-bounded cubical-shaped diagram of f.g. abelian groups. Faces are
// indexed (degree n, 1 <= i <= n, alpha in {0,1}) exactly as on paper.
// Structure maps that would leave the dim bound are omitted.
struct CubicalObject {
    Level level = Level::precubical;
    std::vector<FgAbGroup> groups;  // X_0..X_D

    // face_maps[n][i-1][alpha]: X_n -> X_{n-1}, for 1 <= n <= D; index 0 unused.
    std::vector<std::vector<std::array<Hom, 2>>> face_maps;
    // degeneracy_maps[n][i-1]: X_{n-1} -> X_n (1 <= i <= n); index 0 unused.
    std::vector<std::vector<Hom>> degeneracy_maps;
    // connection_maps[n][i-1]: X_n -> X_{n+1} (1 <= i <= n <= D-1).
    std::vector<std::vector<Hom>> connection_maps;

    std::size_t dim_bound() const { return groups.empty() ? 0 : groups.size() - 1; }
    const Hom& face(std::size_t n, std::size_t i, int alpha) const {
        return face_maps.at(n).at(i - 1).at(alpha);
    }
    const Hom& degeneracy(std::size_t n, std::size_t i) const {  // s_i : X_{n-1} -> X_n
        return degeneracy_maps.at(n).at(i - 1);
    }
    const Hom& connection(std::size_t n, std::size_t i) const {  // Γ_i : X_n -> X_{n+1}
        return connection_maps.at(n).at(i - 1);
    }
    bool has_degeneracies() const { return !degeneracy_maps.empty(); }
    bool has_connections() const { return !connection_maps.empty(); }
};

struct AugmentedCubicalObject {
    CubicalObject object;
    FgAbGroup target;
    Hom augmentation;  // X_0 -> target
};

struct CubicalMorphism {
    CubicalObject source, target;
    std::vector<Hom> components;
};

// Precubical homotopy from f to g: h_n : X_n -> X'_{n+1} for n <= D-1,
// with ∂_1^0 h = f, ∂_1^1 h = g and ∂_i^e h_n = h_{n-1} ∂_{i-1}^e.
struct PrecubicalHomotopy {
    CubicalMorphism from, to;
    std::vector<Hom> components;
};

// Structural sanity (shapes and required structure present); throws on
// irreparable shape problems, reports missing structure.
Report validate_cubical(const CubicalObject& x, Level level);
Report validate_cubical(const AugmentedCubicalObject& x, Level level);
Report validate_cubical_morphism(const CubicalMorphism& f, Level level);
Report validate_precubical_homotopy(const PrecubicalHomotopy& h);

// X_n = a in every degree, all structure maps identity; level cc.
CubicalObject constant_cubical(const FgAbGroup& a, std::size_t dim_bound);

// Tower of normalized subgroups N_0 = X_0, N_n = ∩_{i=1..n} ker ∂_i^1 with
// their canonical inclusions, plus the restricted 0-faces
// δ_i : N_n -> N_{n-1} (1 <= i <= n). Shared by every construction that
// restricts to N, so restricted maps agree as literal matrices.
struct NTower {
    std::vector<exactalg::SubgroupResult> sub;  // per degree
    std::vector<std::vector<Hom>> faces0;       // faces0[n][i-1] = δ_i on N_n
};
NTower n_tower(const CubicalObject& x);

// Degreewise application of a hom-transformer, preserving shape; used by
// additive functors. Transformer signature: Hom -> Hom consistent on
// matching endpoints.
template <typename GroupFn, typename HomFn>
CubicalObject map_object(const CubicalObject& x, GroupFn&& on_group, HomFn&& on_hom) {
    CubicalObject out;
    out.level = x.level;
    for (const auto& g : x.groups) out.groups.push_back(on_group(g));
    out.face_maps.resize(x.face_maps.size());
    for (std::size_t n = 1; n < x.face_maps.size(); ++n)
        for (const auto& pair : x.face_maps[n])
            out.face_maps[n].push_back({on_hom(pair[0]), on_hom(pair[1])});
    out.degeneracy_maps.resize(x.degeneracy_maps.size());
    for (std::size_t n = 1; n < x.degeneracy_maps.size(); ++n)
        for (const auto& s : x.degeneracy_maps[n]) out.degeneracy_maps[n].push_back(on_hom(s));
    out.connection_maps.resize(x.connection_maps.size());
    for (std::size_t n = 1; n < x.connection_maps.size(); ++n)
        for (const auto& c : x.connection_maps[n]) out.connection_maps[n].push_back(on_hom(c));
    return out;
}

}  // namespace mbx::cubical
