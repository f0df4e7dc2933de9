#include "core/fgab.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace mbx::exactalg {

namespace {

// One SNF, many right-hand sides.
class ColumnSolver {
public:
    explicit ColumnSolver(const IntMatrix& a) : cols_(a.cols()), snf_(smith_normal_form(a)) {}

    std::optional<IntVec> solve(const IntVec& b) const {
        IntVec c = snf_.u.apply(b);
        IntVec y(cols_);
        std::size_t nmin = std::min(snf_.s.rows(), snf_.s.cols());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < nmin && snf_.s.at(i, i) != 0) {
                if (c[i] % snf_.s.at(i, i) != 0) return std::nullopt;
                y[i] = c[i] / snf_.s.at(i, i);
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        return snf_.v.apply(y);
    }

private:
    std::size_t cols_;
    SmithResult snf_;
};

// Solver for M x ≡ b modulo the column span of rel; returns the x part.
class ModSolver {
public:
    ModSolver(const IntMatrix& m, const IntMatrix& rel)
        : head_(m.cols()), solver_(m.hstack(rel)) {}

    std::optional<IntVec> solve(const IntVec& b) const {
        auto full = solver_.solve(b);
        if (!full) return std::nullopt;
        full->resize(head_);
        return full;
    }

private:
    std::size_t head_;
    ColumnSolver solver_;
};

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntMatrix out(r, c);
    std::size_t i0 = 0, j0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i0 + i, j0 + j) = b.at(i, j);
        i0 += b.rows();
        j0 += b.cols();
    }
    return out;
}

}  // namespace

struct FgAbGroup::Data {
    std::size_t gens = 0;
    IntMatrix relations;
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;
};

FgAbGroup::FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}

FgAbGroup::FgAbGroup(std::size_t generators, IntMatrix relations) {
    if (relations.rows() != generators)
        throw ShapeError("FgAbGroup: relation matrix must have one row per generator");
    auto d = std::make_shared<Data>();
    d->gens = generators;
    d->relations = std::move(relations);
    SmithResult snf = smith_normal_form(d->relations);
    for (const Int& e : snf.diagonal())
        if (e >= 2) d->invariant_factors.push_back(e);
    d->free_rank = generators - snf.rank;
    d_ = std::move(d);
}

FgAbGroup FgAbGroup::trivial() { return FgAbGroup(); }

FgAbGroup FgAbGroup::free_group(std::size_t rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }

FgAbGroup FgAbGroup::cyclic(const Int& order) {
    if (order < 0) throw StructureError("cyclic: negative order");
    if (order == 0) return free_group(1);
    IntMatrix rel(1, 1);
    rel.at(0, 0) = order;
    return FgAbGroup(1, rel);
}

FgAbGroup FgAbGroup::from_invariants(std::size_t free_rank, const std::vector<Int>& torsion) {
    std::size_t n = free_rank + torsion.size();
    IntMatrix rel(n, torsion.size());
    for (std::size_t k = 0; k < torsion.size(); ++k) {
        if (torsion[k] < 2) throw StructureError("from_invariants: torsion factors must be >= 2");
        rel.at(free_rank + k, k) = torsion[k];
    }
    return FgAbGroup(n, rel);
}

std::size_t FgAbGroup::generators() const { return d_->gens; }
const IntMatrix& FgAbGroup::relations() const { return d_->relations; }
std::size_t FgAbGroup::free_rank() const { return d_->free_rank; }
const std::vector<Int>& FgAbGroup::invariant_factors() const { return d_->invariant_factors; }

bool FgAbGroup::is_trivial() const { return d_->free_rank == 0 && d_->invariant_factors.empty(); }
bool FgAbGroup::is_free() const { return d_->invariant_factors.empty(); }

bool FgAbGroup::isomorphic(const FgAbGroup& other) const {
    return d_->free_rank == other.d_->free_rank &&
           d_->invariant_factors == other.d_->invariant_factors;
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
    if (d_ == other.d_) return true;
    return d_->gens == other.d_->gens && d_->relations == other.d_->relations;
}

std::string FgAbGroup::canonical_name() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (d_->free_rank > 0) {
        os << "Z";
        if (d_->free_rank > 1) os << "^" << d_->free_rank;
        first = false;
    }
    for (const Int& t : d_->invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

std::optional<Int> group_order(const FgAbGroup& g) {
    if (g.free_rank() > 0) return std::nullopt;
    Int n = 1;
    for (const Int& t : g.invariant_factors()) n *= t;
    return n;
}

struct Hom::Data {
    FgAbGroup source, target;
    IntMatrix matrix;
};

Hom::Hom(FgAbGroup source, FgAbGroup target, IntMatrix matrix) {
    if (matrix.rows() != target.generators() || matrix.cols() != source.generators())
        throw ShapeError("Hom: matrix must be target-generators x source-generators");
    d_ = std::make_shared<Data>(Data{std::move(source), std::move(target), std::move(matrix)});
}

Hom Hom::identity(const FgAbGroup& g) {
    return Hom(g, g, IntMatrix::identity(g.generators()));
}

Hom Hom::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return Hom(source, target, IntMatrix(target.generators(), source.generators()));
}

const FgAbGroup& Hom::source() const { return d_->source; }
const FgAbGroup& Hom::target() const { return d_->target; }
const IntMatrix& Hom::matrix() const { return d_->matrix; }

bool Hom::is_well_defined() const {
    const IntMatrix& rel = d_->source.relations();
    if (rel.cols() == 0) return true;
    ColumnSolver solver(d_->target.relations());
    for (std::size_t c = 0; c < rel.cols(); ++c)
        if (!solver.solve(d_->matrix.apply(rel.column(c)))) return false;
    return true;
}

Hom Hom::compose(const Hom& inner) const {
    if (!inner.target().same_presentation(d_->source))
        throw ShapeError("Hom compose: middle presentations disagree");
    return Hom(inner.source(), d_->target, d_->matrix * inner.matrix());
}

Hom Hom::operator+(const Hom& rhs) const {
    if (!d_->source.same_presentation(rhs.source()) || !d_->target.same_presentation(rhs.target()))
        throw ShapeError("Hom sum: endpoint presentations disagree");
    return Hom(d_->source, d_->target, d_->matrix + rhs.matrix());
}

Hom Hom::operator-(const Hom& rhs) const { return *this + (-rhs); }

Hom Hom::operator-() const { return Hom(d_->source, d_->target, -d_->matrix); }

Hom Hom::scaled(const Int& f) const { return Hom(d_->source, d_->target, d_->matrix.scaled(f)); }

bool Hom::is_zero_map() const {
    ColumnSolver solver(d_->target.relations());
    for (std::size_t c = 0; c < d_->matrix.cols(); ++c)
        if (!solver.solve(d_->matrix.column(c))) return false;
    return true;
}

bool Hom::equal_mod_target(const Hom& rhs) const { return (*this - rhs).is_zero_map(); }

std::pair<std::size_t, std::vector<Int>> canonical_form(const FgAbGroup& g) {
    return {g.free_rank(), g.invariant_factors()};
}

bool in_subgroup(const FgAbGroup& ambient, const IntMatrix& gens, const IntVec& v) {
    return subgroup_coordinates(ambient, gens, v).has_value();
}

std::optional<IntVec> subgroup_coordinates(const FgAbGroup& ambient, const IntMatrix& gens,
                                           const IntVec& v) {
    ModSolver solver(gens, ambient.relations());
    return solver.solve(v);
}

SubgroupResult subgroup_from_generators(const FgAbGroup& ambient, const IntMatrix& gens) {
    if (gens.rows() != ambient.generators())
        throw ShapeError("subgroup_from_generators: generator vectors live in the ambient group");
    IntMatrix raw = integer_kernel(gens.hstack(ambient.relations()));
    IntMatrix relations = raw.submatrix(0, 0, gens.cols(), raw.cols());
    FgAbGroup sub(gens.cols(), relations);
    return {sub, Hom(sub, ambient, gens)};
}

SubgroupResult hom_kernel(const Hom& f) {
    IntMatrix raw = integer_kernel(f.matrix().hstack(f.target().relations()));
    IntMatrix projected = raw.submatrix(0, 0, f.source().generators(), raw.cols());
    IntMatrix basis = column_lattice_basis(projected);
    return subgroup_from_generators(f.source(), basis);
}

SubgroupResult hom_image(const Hom& f) { return subgroup_from_generators(f.target(), f.matrix()); }

QuotientResult quotient(const FgAbGroup& g, const Hom& sub) {
    if (!sub.target().same_presentation(g)) throw ShapeError("quotient: sub must land in g");
    if (!is_injective(sub)) throw StructureError("quotient: sub is not injective");
    FgAbGroup q(g.generators(), g.relations().hstack(sub.matrix()));
    return {q, Hom(g, q, IntMatrix::identity(g.generators()))};
}

QuotientResult cokernel(const Hom& f) {
    FgAbGroup q(f.target().generators(), f.target().relations().hstack(f.matrix()));
    return {q, Hom(f.target(), q, IntMatrix::identity(f.target().generators()))};
}

SubgroupResult intersect_kernels(const FgAbGroup& source, const std::vector<Hom>& fs) {
    if (fs.empty()) return {source, Hom::identity(source)};
    IntMatrix stacked(0, source.generators());
    std::vector<IntMatrix> target_rels;
    for (const Hom& f : fs) {
        if (!f.source().same_presentation(source))
            throw ShapeError("intersect_kernels: mismatched sources");
        stacked = stacked.vstack(f.matrix());
        target_rels.push_back(f.target().relations());
    }
    IntMatrix rel = block_diagonal(target_rels);
    IntMatrix raw = integer_kernel(stacked.hstack(rel));
    IntMatrix projected = raw.submatrix(0, 0, source.generators(), raw.cols());
    IntMatrix basis = column_lattice_basis(projected);
    return subgroup_from_generators(source, basis);
}

SubgroupResult subgroup_sum(const FgAbGroup& ambient, const IntMatrix& a, const IntMatrix& b) {
    return subgroup_from_generators(ambient, a.hstack(b));
}

SubgroupResult subgroup_intersection(const FgAbGroup& ambient, const IntMatrix& a,
                                     const IntMatrix& b) {
    IntMatrix sys = a.hstack(-b).hstack(-ambient.relations());
    IntMatrix raw = integer_kernel(sys);
    IntMatrix u_part = raw.submatrix(0, 0, a.cols(), raw.cols());
    IntMatrix gens = column_lattice_basis(a * u_part);
    return subgroup_from_generators(ambient, gens);
}

bool subgroups_equal(const FgAbGroup& ambient, const IntMatrix& a, const IntMatrix& b) {
    ModSolver in_b(b, ambient.relations());
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!in_b.solve(a.column(c))) return false;
    ModSolver in_a(a, ambient.relations());
    for (std::size_t c = 0; c < b.cols(); ++c)
        if (!in_a.solve(b.column(c))) return false;
    return true;
}

bool is_injective(const Hom& f) { return hom_kernel(f).group.is_trivial(); }

bool is_surjective(const Hom& f) { return cokernel(f).group.is_trivial(); }

Hom lift_through(const Hom& e, const Hom& phi, const Int& twist) {
    if (phi.source().relations().cols() != 0)
        throw StructureError("lift_through: phi.source must be presented free");
    if (!e.target().same_presentation(phi.target()))
        throw ShapeError("lift_through: targets disagree");
    if (!is_surjective(e)) throw StructureError("lift_through: e is not surjective");

    ModSolver solver(e.matrix(), e.target().relations());
    IntMatrix psi(e.source().generators(), phi.source().generators());
    for (std::size_t j = 0; j < phi.source().generators(); ++j) {
        auto x = solver.solve(phi.matrix().column(j));
        if (!x) throw StructureError("lift_through: no integral preimage (e not epimorphic)");
        psi.set_column(j, *x);
    }
    if (twist != 0) {
        SubgroupResult ker = hom_kernel(e);
        if (ker.inclusion.matrix().cols() > 0) {
            IntVec k0 = ker.inclusion.matrix().column(0);
            for (std::size_t j = 0; j < psi.cols(); ++j)
                for (std::size_t i = 0; i < psi.rows(); ++i) psi.at(i, j) += twist * k0[i];
        }
    }
    return Hom(phi.source(), e.source(), psi);
}

Hom factor_through(const Hom& incl, const Hom& f) {
    if (!incl.target().same_presentation(f.target()))
        throw ShapeError("factor_through: targets disagree");
    ModSolver solver(incl.matrix(), incl.target().relations());
    IntMatrix g(incl.source().generators(), f.source().generators());
    for (std::size_t j = 0; j < f.source().generators(); ++j) {
        auto c = solver.solve(f.matrix().column(j));
        if (!c) throw StructureError("factor_through: map does not land in the subgroup");
        g.set_column(j, *c);
    }
    return Hom(f.source(), incl.source(), g);
}

DirectSumResult direct_sum(const std::vector<FgAbGroup>& parts) {
    std::vector<IntMatrix> rels;
    std::size_t total = 0;
    for (const auto& p : parts) {
        rels.push_back(p.relations());
        total += p.generators();
    }
    FgAbGroup sum(total, block_diagonal(rels));
    DirectSumResult out{sum, {}, {}};
    std::size_t offset = 0;
    for (const auto& p : parts) {
        IntMatrix inj(total, p.generators());
        IntMatrix proj(p.generators(), total);
        for (std::size_t i = 0; i < p.generators(); ++i) {
            inj.at(offset + i, i) = 1;
            proj.at(i, offset + i) = 1;
        }
        out.injections.emplace_back(p, sum, inj);
        out.projections.emplace_back(sum, p, proj);
        offset += p.generators();
    }
    return out;
}

DirectSumResult direct_power(const FgAbGroup& g, std::size_t n) {
    return direct_sum(std::vector<FgAbGroup>(n, g));
}

Hom tuple_hom(const DirectSumResult& sum, const std::vector<Hom>& fs) {
    if (fs.size() != sum.injections.size()) throw ShapeError("tuple_hom: component count mismatch");
    if (fs.empty()) throw ShapeError("tuple_hom: needs at least one component");
    IntMatrix stacked(0, fs.front().source().generators());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fs[i].source().same_presentation(fs.front().source()))
            throw ShapeError("tuple_hom: mismatched sources");
        if (!fs[i].target().same_presentation(sum.injections[i].source()))
            throw ShapeError("tuple_hom: component target disagrees with summand");
        stacked = stacked.vstack(fs[i].matrix());
    }
    return Hom(fs.front().source(), sum.group, stacked);
}

FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b) {
    std::size_t ga = a.generators(), gb = b.generators();
    std::size_t ra = a.relations().cols(), rb = b.relations().cols();
    IntMatrix rel(ga * gb, ra * gb + ga * rb);
    std::size_t col = 0;
    for (std::size_t c = 0; c < ra; ++c)
        for (std::size_t j = 0; j < gb; ++j, ++col)
            for (std::size_t i = 0; i < ga; ++i) rel.at(i * gb + j, col) = a.relations().at(i, c);
    for (std::size_t c = 0; c < rb; ++c)
        for (std::size_t i = 0; i < ga; ++i, ++col)
            for (std::size_t j = 0; j < gb; ++j) rel.at(i * gb + j, col) = b.relations().at(j, c);
    return FgAbGroup(ga * gb, rel);
}

Hom tensor_hom(const Hom& f, const Hom& g) {
    FgAbGroup src = tensor_group(f.source(), g.source());
    FgAbGroup tgt = tensor_group(f.target(), g.target());
    std::size_t ga = f.source().generators(), gb = g.source().generators();
    std::size_t ga2 = f.target().generators(), gb2 = g.target().generators();
    IntMatrix m(ga2 * gb2, ga * gb);
    for (std::size_t i2 = 0; i2 < ga2; ++i2)
        for (std::size_t j2 = 0; j2 < gb2; ++j2)
            for (std::size_t i = 0; i < ga; ++i)
                for (std::size_t j = 0; j < gb; ++j)
                    m.at(i2 * gb2 + j2, i * gb + j) = f.matrix().at(i2, i) * g.matrix().at(j2, j);
    return Hom(src, tgt, m);
}

SubgroupResult hom_group(const FgAbGroup& b, const FgAbGroup& g) {
    std::size_t h = b.generators(), rb = b.relations().cols(), gg = g.generators();
    DirectSumResult power = direct_power(g, h);
    DirectSumResult rel_power = direct_power(g, rb);
    IntMatrix phi(rb * gg, h * gg);
    for (std::size_t c = 0; c < rb; ++c)
        for (std::size_t i = 0; i < h; ++i) {
            const Int& coeff = b.relations().at(i, c);
            if (coeff == 0) continue;
            for (std::size_t k = 0; k < gg; ++k) phi.at(c * gg + k, i * gg + k) = coeff;
        }
    return hom_kernel(Hom(power.group, rel_power.group, phi));
}

Hom hom_group_induced(const FgAbGroup& b, const Hom& f, const SubgroupResult& hg,
                      const SubgroupResult& hg2) {
    std::size_t h = b.generators();
    DirectSumResult src_power = direct_power(f.source(), h);
    DirectSumResult tgt_power = direct_power(f.target(), h);
    IntMatrix diag(tgt_power.group.generators(), src_power.group.generators());
    std::size_t sg = f.source().generators(), tg = f.target().generators();
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t r = 0; r < tg; ++r)
            for (std::size_t c = 0; c < sg; ++c) diag.at(i * tg + r, i * sg + c) = f.matrix().at(r, c);
    Hom big(src_power.group, tgt_power.group, diag);
    return factor_through(hg2.inclusion, big.compose(hg.inclusion));
}

}  // namespace mbx::exactalg
