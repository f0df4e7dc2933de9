#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/fgab.hpp"
#include "core/report.hpp"

namespace mbx::chain {

using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::Int;
using exactalg::SubgroupResult;

// Degree-bounded chain complex: groups C_0..C_D with differentials
// d_n : C_n -> C_{n-1} for 1 <= n <= D.
struct ChainComplex {
    std::vector<FgAbGroup> groups;
    std::vector<Hom> differentials;  // differentials[n-1] = d_n

    std::size_t dim_bound() const { return groups.empty() ? 0 : groups.size() - 1; }
    const Hom& d(std::size_t n) const { return differentials.at(n - 1); }
};

struct AugmentedChainComplex {
    ChainComplex complex;
    FgAbGroup target;
    Hom augmentation;  // C_0 -> target
};

// Chain map between complexes of equal dim_bound.
struct ChainMap {
    ChainComplex source, target;
    std::vector<Hom> components;  // components[n] : C_n -> C'_n
};

// Chain homotopy between maps f, g with common endpoints: components
// h_n : C_n -> C'_{n+1} for n <= D-1 (h at top degree is zero by
// convention).
struct ChainHomotopy {
    ChainMap from, to;
    std::vector<Hom> components;
};

ChainComplex zero_complex(const std::vector<FgAbGroup>& groups);
ChainMap identity_chain_map(const ChainComplex& c);
ChainMap compose(const ChainMap& outer, const ChainMap& inner);

Report validate_complex(const ChainComplex& c);
Report validate_complex(const AugmentedChainComplex& c);
Report validate_chain_map(const ChainMap& f);
Report validate_homotopy(const ChainHomotopy& h);

struct HomologyResult {
    FgAbGroup group;
    bool certified;  // false at the top degree (no degree D+1 boundaries)
};

// H_n = ker d_n / im d_{n+1}, d_0 = 0. At n = D returns ker d_D with
// certified = false.
HomologyResult homology(const ChainComplex& c, std::size_t n);

// ker d_n as a subgroup of C_n (the whole C_0 at n = 0).
SubgroupResult cycles(const ChainComplex& c, std::size_t n);

// Presentation of H_n together with the projection from the cycle group.
struct HomologyPresentation {
    SubgroupResult cycle;     // Z_n ⊆ C_n
    FgAbGroup group;          // Z_n / B_n
    Hom projection;           // Z_n -> H_n
    bool certified;
};
HomologyPresentation homology_presentation(const ChainComplex& c, std::size_t n);

// Map H_n(source) -> H_n(target) induced by a chain map.
Hom induced_on_homology(const ChainMap& f, std::size_t n);

// Shift functor: degree 0 becomes the augmentation target.
ChainComplex shift(const AugmentedChainComplex& x);

}  // namespace mbx::chain
