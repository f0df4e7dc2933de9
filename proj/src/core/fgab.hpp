#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/intmatrix.hpp"

namespace mbx::exactalg {

// Finitely generated abelian group, presented by an integer relation matrix
// (one row per generator, one column per relation vector). The canonical
// invariant-factor form is computed once at construction; two groups are
// considered equal (isomorphic) iff their canonical forms agree, while the
// presentation itself is preserved for all computations. Immutable.
class FgAbGroup {
public:
    FgAbGroup();  // trivial group, zero generators
    FgAbGroup(std::size_t generators, IntMatrix relations);

    static FgAbGroup trivial();
    static FgAbGroup free_group(std::size_t rank);
    static FgAbGroup cyclic(const Int& order);  // Z/order; order 0 gives Z
    static FgAbGroup from_invariants(std::size_t free_rank, const std::vector<Int>& torsion);

    std::size_t generators() const;
    const IntMatrix& relations() const;

    std::size_t free_rank() const;
    const std::vector<Int>& invariant_factors() const;

    bool is_trivial() const;
    bool is_free() const;

    // Isomorphism-class equality (canonical forms agree).
    bool isomorphic(const FgAbGroup& other) const;
    // Literal presentation equality (generator count and relation matrix).
    bool same_presentation(const FgAbGroup& other) const;

    // "0", "Z", "Z^2 + Z/2 + Z/4", ...
    std::string canonical_name() const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// Order of the group (product of invariant factors) if finite.
std::optional<Int> group_order(const FgAbGroup& g);

// Homomorphism between presented groups: matrix on generators,
// target-generators x source-generators. Immutable.
class Hom {
public:
    Hom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static Hom identity(const FgAbGroup& g);
    static Hom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const;
    const FgAbGroup& target() const;
    const IntMatrix& matrix() const;

    // Maps every source relation into the integer span of target relations.
    bool is_well_defined() const;

    Hom compose(const Hom& inner) const;  // this ∘ inner
    Hom operator+(const Hom& rhs) const;
    Hom operator-(const Hom& rhs) const;
    Hom operator-() const;
    Hom scaled(const Int& f) const;

    bool is_zero_map() const;               // zero modulo target relations
    bool equal_mod_target(const Hom& rhs) const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// Subgroup (or kernel/image) of an ambient group: the abstract group plus
// its inclusion hom into the ambient group.
struct SubgroupResult {
    FgAbGroup group;
    Hom inclusion;
};

// Quotient group plus the projection from the ambient group.
struct QuotientResult {
    FgAbGroup group;
    Hom projection;
};

// Canonical form of g: (free_rank, invariant_factors).
std::pair<std::size_t, std::vector<Int>> canonical_form(const FgAbGroup& g);

// Does the vector v (in ambient generator coordinates) lie in the subgroup
// generated by the columns of gens, modulo the ambient relations?
bool in_subgroup(const FgAbGroup& ambient, const IntMatrix& gens, const IntVec& v);
// Canonical coordinates of v in terms of the columns of gens (mod ambient
// relations); nullopt when v is not in the subgroup.
std::optional<IntVec> subgroup_coordinates(const FgAbGroup& ambient, const IntMatrix& gens,
                                           const IntVec& v);

// Presents the subgroup of `ambient` generated by the columns of gens;
// relations are complete (all integer combinations landing in the ambient
// relation span).
SubgroupResult subgroup_from_generators(const FgAbGroup& ambient, const IntMatrix& gens);

// Kernel of f as a subgroup of the source: generator matrix is the
// deterministic lattice basis of {x : f(x) = 0 in target}.
SubgroupResult hom_kernel(const Hom& f);

// Image of f as a subgroup of the target; inclusion columns are the images
// of the source generators, kept as given.
SubgroupResult hom_image(const Hom& f);

// Quotient of g by the image of the injective hom sub : s -> g.
QuotientResult quotient(const FgAbGroup& g, const Hom& sub);

// Cokernel of f (quotient of target by the image).
QuotientResult cokernel(const Hom& f);

// Intersection of the kernels of fs (all sharing `source`). Empty list
// yields the whole source with identity inclusion.
SubgroupResult intersect_kernels(const FgAbGroup& source, const std::vector<Hom>& fs);

// Sum and intersection of two subgroups of a common ambient group, given by
// generator matrices.
SubgroupResult subgroup_sum(const FgAbGroup& ambient, const IntMatrix& a, const IntMatrix& b);
SubgroupResult subgroup_intersection(const FgAbGroup& ambient, const IntMatrix& a,
                                     const IntMatrix& b);
bool subgroups_equal(const FgAbGroup& ambient, const IntMatrix& a, const IntMatrix& b);

bool is_injective(const Hom& f);
bool is_surjective(const Hom& f);  // cokernel trivial

// Lift of phi through the surjection e: returns psi with e∘psi = phi.
// Requires phi.source free. Deterministic: each basis generator's preimage
// is the canonical solve_linear solution; a nonzero twist adds that many
// copies of the first kernel basis vector of e to every column (still a
// lift, used to produce distinct lifts on purpose).
Hom lift_through(const Hom& e, const Hom& phi, const Int& twist = 0);

// Factorization of f through an injective subgroup inclusion incl: for f
// landing in the subgroup, returns g with incl∘g = f. Throws if f does not
// factor.
Hom factor_through(const Hom& incl, const Hom& f);

// Finite direct sum with coordinate injections and projections.
struct DirectSumResult {
    FgAbGroup group;
    std::vector<Hom> injections;
    std::vector<Hom> projections;
};
DirectSumResult direct_sum(const std::vector<FgAbGroup>& parts);
DirectSumResult direct_power(const FgAbGroup& g, std::size_t n);

// Combines maps f_i : X -> T_i into X -> ⊕T_i.
Hom tuple_hom(const DirectSumResult& sum, const std::vector<Hom>& fs);

// Tensor product of presentations; generator order is (i, j) lexicographic
// with i over a's generators.
FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b);
Hom tensor_hom(const Hom& f, const Hom& g);

// Hom(b, g) as a subgroup of g^h (h = generators of b): tuples of images of
// b's generators killing b's relations.
SubgroupResult hom_group(const FgAbGroup& b, const FgAbGroup& g);
// Map Hom(b, g) -> Hom(b, g') induced by f : g -> g'. hg and hg2 must be
// the hom_group results for (b, f.source) and (b, f.target).
Hom hom_group_induced(const FgAbGroup& b, const Hom& f, const SubgroupResult& hg,
                      const SubgroupResult& hg2);

}  // namespace mbx::exactalg
