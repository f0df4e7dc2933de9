#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/cubical.hpp"
#include "core/report.hpp"

namespace mbx::cubset {

using exactalg::FgAbGroup;

// Finite poset; leq is the full reflexive-transitive relation.
struct Poset {
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> leq;  // leq[a][b] == (a <= b)

    std::size_t size() const { return elements.size(); }
};

// Builds a poset from covering/comparability pairs (indices into elements);
// reflexive-transitive closure is taken, antisymmetry is checked.
Poset make_poset(std::vector<std::string> elements,
                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

Poset chain_poset(std::size_t n);      // 0 < 1 < ... < n-1
Poset antichain_poset(std::size_t n);  // no relations

// Finite cubical set with connections, as lookup tables. Cube index tables
// follow the algebraic indexing: faces (degree n, 1<=i<=n, alpha),
// degeneracies s_i : X_{n-1} -> X_n keyed by target degree, connections
// Γ_i : X_n -> X_{n+1} keyed by source degree.
struct FiniteCubicalSet {
    std::vector<std::vector<std::string>> cube_names;  // per degree
    std::vector<std::vector<std::array<std::vector<std::uint32_t>, 2>>> faces;
    std::vector<std::vector<std::vector<std::uint32_t>>> degeneracies;
    std::vector<std::vector<std::vector<std::uint32_t>>> connections;
    std::optional<std::uint32_t> basepoint;  // index into degree 0

    std::size_t dim_bound() const { return cube_names.empty() ? 0 : cube_names.size() - 1; }
    std::size_t count(std::size_t n) const { return cube_names[n].size(); }
    std::uint32_t face(std::size_t n, std::size_t i, int a, std::uint32_t c) const {
        return faces[n][i - 1][a][c];
    }
    std::uint32_t degeneracy(std::size_t n, std::size_t i, std::uint32_t c) const {
        return degeneracies[n][i - 1][c];
    }
    std::uint32_t connection(std::size_t n, std::size_t i, std::uint32_t c) const {
        return connections[n][i - 1][c];
    }
    bool has_connections() const { return !connections.empty(); }
};

// Pointwise check of the cubical-with-connections identities.
Report validate_cubical_set(const FiniteCubicalSet& x);

// Cubical set of monotone maps {0,1}^n -> p. Faces insert a constant
// coordinate, degeneracies delete one, connections precompose with
// (t_1,...,t_{n+1}) -> (..., max(t_i, t_{i+1}), ...). Throws when a degree
// would exceed max_cubes_per_degree.
FiniteCubicalSet poset_cubical_set(const Poset& p, std::size_t dim_bound,
                                   std::size_t max_cubes_per_degree = 200000);

// Independent brute-force count of monotone maps {0,1}^n -> p (test oracle;
// enumerates all |p|^(2^n) assignments).
std::uint64_t count_monotone_maps_brute(const Poset& p, std::size_t n);

// Free coeff-module on the cubes, degreewise; level cc.
cubical::CubicalObject linearize(const FiniteCubicalSet& x, const FgAbGroup& coeff);

}  // namespace mbx::cubset
