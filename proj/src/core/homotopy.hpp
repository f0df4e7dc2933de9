#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/cubical.hpp"
#include "core/cubset.hpp"
#include "core/fgab.hpp"
#include "core/report.hpp"

namespace mbx::homotopy {

using exactalg::FgAbGroup;

// Finite group structure on one degree of a cubical set; elements are the
// cube indices.
struct DegreeGroup {
    std::size_t size = 0;
    std::uint32_t unit = 0;
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> mult;
    std::function<std::uint32_t(std::uint32_t)> inverse;
};

// Finite cubical group: every structure map a homomorphism, basepoint the
// unit of G_0.
struct FiniteCubicalGroup {
    cubset::FiniteCubicalSet set;
    std::vector<DegreeGroup> groups;

    std::size_t dim_bound() const { return set.dim_bound(); }
};

// Constant cubical group on a finite abelian group (all structure maps
// identity, with connections).
FiniteCubicalGroup constant_group(const FgAbGroup& coeff, std::size_t dim_bound);

// Degreewise coeff-span of a finite cubical set as a finite cubical group
// (coeff finite abelian). Throws when some degree would exceed max_elements.
FiniteCubicalGroup linearize_group(const cubset::FiniteCubicalSet& x, const FgAbGroup& coeff,
                                   std::size_t max_elements = 65536);

// Builds a FiniteCubicalGroup from explicit multiplication tables (one per
// degree); validates group axioms and homomorphism property.
FiniteCubicalGroup group_from_tables(cubset::FiniteCubicalSet set,
                                     std::vector<std::vector<std::vector<std::uint32_t>>> tables);

Report validate_cubical_group(const FiniteCubicalGroup& g);

// Iterated degenerate basepoints ψ_0..ψ_D.
std::vector<std::uint32_t> basepoint_tower(const cubset::FiniteCubicalSet& x);

// Kan condition up to the given degree: every open box (2n-1 compatible
// faces with one (i,α) slot omitted) admits a filler; boxes are enumerated
// exhaustively.
Report kan_check(const cubset::FiniteCubicalSet& x, std::size_t up_to);

struct HomotopyGroupResult {
    std::size_t degree = 0;
    bool certified = true;
    std::vector<std::uint32_t> ztilde;           // cube indices with all faces ψ
    std::vector<std::uint32_t> class_of;         // per ztilde position
    std::size_t class_count = 0;
    std::uint32_t basepoint_class = 0;
    // class multiplication table via fillers (n >= 1; n = 0 only for groups)
    std::optional<std::vector<std::vector<std::uint32_t>>> product;
    std::optional<FgAbGroup> abelian_form;       // canonical form when abelian
};

// π_n of a pointed Kan cubical set (Kan condition checked up to n+1).
// All filler choices are enumerated; an ambiguous product throws.
HomotopyGroupResult pi(const cubset::FiniteCubicalSet& x, std::size_t n);
// π_n of a cubical group (adds the product for n = 0).
HomotopyGroupResult pi(const FiniteCubicalGroup& g, std::size_t n);

// Partition of ztilde via the second displayed form of ~ (last column).
std::vector<std::uint32_t> pi_partition_last_column(const cubset::FiniteCubicalSet& x,
                                                    std::size_t n);

// Moore complex of a finite cubical group: M_n by table filtering, with the
// boundary, normality and composite-triviality assertions, and H_n = Z_n/B_n
// as coset partitions.
struct MooreGroupComplex {
    std::vector<std::vector<std::uint32_t>> m;  // element indices of M_n
    struct Level {
        std::vector<std::uint32_t> z;         // Z_n ⊆ M_n (element indices)
        std::vector<std::uint32_t> b;         // B_n = ∂_{n+1}^0(M_{n+1}) (empty tower at top)
        std::vector<std::uint32_t> class_of;  // coset partition of z
        std::size_t classes = 0;
        std::optional<FgAbGroup> abelian_form;
        bool certified = true;
    };
    std::vector<Level> homology;
    Report report;
};
MooreGroupComplex moore_group_complex(const FiniteCubicalGroup& g);

// Props 2.6-2.8 and Cor 2.9 instance checks at degree n.
Report verify_pi_vs_moore(const FiniteCubicalGroup& g, std::size_t n);

// Presents a finite abelian cubical group as a cubical object over f.g.
// abelian groups (one generator per element).
cubical::CubicalObject cubical_object_from_abelian_group(const FiniteCubicalGroup& g);

bool is_abelian(const DegreeGroup& g);

}  // namespace mbx::homotopy
