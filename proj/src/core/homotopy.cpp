#include "core/homotopy.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

#include "core/error.hpp"
#include "core/norm.hpp"

namespace mbx::homotopy {

using cubset::FiniteCubicalSet;
using exactalg::Int;
using exactalg::IntMatrix;

namespace {

// Finite abelian coefficient group in invariant-factor coordinates.
struct FiniteCoeff {
    std::vector<std::uint64_t> factors;
    std::uint64_t order = 1;

    explicit FiniteCoeff(const FgAbGroup& g) {
        if (g.free_rank() != 0)
            throw StructureError("finite coefficient group required, got " + g.canonical_name());
        for (const Int& f : g.invariant_factors()) {
            if (f > 4096) throw StructureError("coefficient torsion too large for table form");
            factors.push_back(static_cast<std::uint64_t>(f));
            order *= factors.back();
        }
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t out = 0, mul = 1;
        for (std::uint64_t f : factors) {
            out += ((a % f + b % f) % f) * mul;
            a /= f;
            b /= f;
            mul *= f;
        }
        return out;
    }
    std::uint64_t neg(std::uint64_t a) const {
        std::uint64_t out = 0, mul = 1;
        for (std::uint64_t f : factors) {
            out += ((f - a % f) % f) * mul;
            a /= f;
            mul *= f;
        }
        return out;
    }
};

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::uint32_t find(std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// canonical class ids in first-appearance order
std::pair<std::vector<std::uint32_t>, std::size_t> classes_from(UnionFind& uf,
                                                                std::size_t count) {
    std::vector<std::uint32_t> out(count);
    std::map<std::uint32_t, std::uint32_t> remap;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
        auto it = remap.find(root);
        if (it == remap.end()) it = remap.emplace(root, static_cast<std::uint32_t>(remap.size())).first;
        out[i] = it->second;
    }
    return {out, remap.size()};
}

FgAbGroup group_from_class_table(const std::vector<std::vector<std::uint32_t>>& table) {
    std::size_t m = table.size();
    IntMatrix rel(m, m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::size_t col = a * m + b;
            rel.at(a, col) += 1;
            rel.at(b, col) += 1;
            rel.at(table[a][b], col) -= 1;
        }
    return FgAbGroup(m, exactalg::column_lattice_basis(rel));
}

}  // namespace

bool is_abelian(const DegreeGroup& g) {
    for (std::uint32_t a = 0; a < g.size; ++a)
        for (std::uint32_t b = 0; b < a; ++b)
            if (g.mult(a, b) != g.mult(b, a)) return false;
    return true;
}

FiniteCubicalGroup constant_group(const FgAbGroup& coeff, std::size_t dim_bound) {
    auto fc = std::make_shared<FiniteCoeff>(coeff);
    std::size_t m = fc->order;
    FiniteCubicalSet set;
    set.cube_names.resize(dim_bound + 1);
    for (std::size_t n = 0; n <= dim_bound; ++n)
        for (std::size_t e = 0; e < m; ++e) set.cube_names[n].push_back("e" + std::to_string(e));
    std::vector<std::uint32_t> id_table(m);
    std::iota(id_table.begin(), id_table.end(), 0);
    set.faces.resize(dim_bound + 1);
    set.degeneracies.resize(dim_bound + 1);
    if (dim_bound >= 2) set.connections.resize(dim_bound);
    for (std::size_t n = 1; n <= dim_bound; ++n) {
        set.faces[n].assign(n, {id_table, id_table});
        set.degeneracies[n].assign(n, id_table);
        if (n + 1 <= dim_bound) set.connections[n].assign(n, id_table);
    }
    set.basepoint = 0;

    FiniteCubicalGroup g{std::move(set), {}};
    for (std::size_t n = 0; n <= dim_bound; ++n) {
        DegreeGroup dg;
        dg.size = m;
        dg.unit = 0;
        dg.mult = [fc](std::uint32_t a, std::uint32_t b) {
            return static_cast<std::uint32_t>(fc->add(a, b));
        };
        dg.inverse = [fc](std::uint32_t a) { return static_cast<std::uint32_t>(fc->neg(a)); };
        g.groups.push_back(std::move(dg));
    }
    return g;
}

FiniteCubicalGroup linearize_group(const FiniteCubicalSet& x, const FgAbGroup& coeff,
                                   std::size_t max_elements) {
    auto fc = std::make_shared<FiniteCoeff>(coeff);
    std::size_t D = x.dim_bound();
    std::vector<std::uint64_t> sizes;
    for (std::size_t n = 0; n <= D; ++n) {
        std::uint64_t s = 1;
        for (std::size_t c = 0; c < x.count(n); ++c) {
            s *= fc->order;
            if (s > max_elements)
                throw StructureError("linearize_group: degree " + std::to_string(n) +
                                     " exceeds element limit");
        }
        sizes.push_back(s);
    }

    auto decode = [&](std::uint64_t idx, std::size_t count) {
        std::vector<std::uint64_t> digits(count);
        for (std::size_t c = 0; c < count; ++c) {
            digits[c] = idx % fc->order;
            idx /= fc->order;
        }
        return digits;
    };
    auto encode = [&](const std::vector<std::uint64_t>& digits) {
        std::uint64_t idx = 0;
        for (std::size_t c = digits.size(); c-- > 0;) idx = idx * fc->order + digits[c];
        return idx;
    };

    // pushforward along a cube table: (θ_* a)(c') = Σ_{θ(c)=c'} a(c)
    auto pushforward = [&](std::size_t from_deg, std::size_t to_deg,
                           const std::vector<std::uint32_t>& tab) {
        std::vector<std::uint32_t> out(sizes[from_deg]);
        for (std::uint64_t idx = 0; idx < sizes[from_deg]; ++idx) {
            auto digits = decode(idx, x.count(from_deg));
            std::vector<std::uint64_t> image(x.count(to_deg), 0);
            for (std::size_t c = 0; c < digits.size(); ++c)
                image[tab[c]] = fc->add(image[tab[c]], digits[c]);
            out[idx] = static_cast<std::uint32_t>(encode(image));
        }
        return out;
    };

    FiniteCubicalSet set;
    set.cube_names.resize(D + 1);
    for (std::size_t n = 0; n <= D; ++n)
        for (std::uint64_t e = 0; e < sizes[n]; ++e)
            set.cube_names[n].push_back("e" + std::to_string(e));
    set.faces.resize(D + 1);
    set.degeneracies.resize(D + 1);
    if (D >= 2 && x.has_connections()) set.connections.resize(D);
    for (std::size_t n = 1; n <= D; ++n) {
        set.faces[n].resize(n);
        set.degeneracies[n].resize(n);
        for (std::size_t i = 1; i <= n; ++i) {
            set.faces[n][i - 1][0] = pushforward(n, n - 1, x.faces[n][i - 1][0]);
            set.faces[n][i - 1][1] = pushforward(n, n - 1, x.faces[n][i - 1][1]);
            set.degeneracies[n][i - 1] = pushforward(n - 1, n, x.degeneracies[n][i - 1]);
        }
        if (n + 1 <= D && x.has_connections()) {
            set.connections[n].resize(n);
            for (std::size_t i = 1; i <= n; ++i)
                set.connections[n][i - 1] = pushforward(n, n + 1, x.connections[n][i - 1]);
        }
    }
    set.basepoint = 0;

    FiniteCubicalGroup g{std::move(set), {}};
    for (std::size_t n = 0; n <= D; ++n) {
        DegreeGroup dg;
        dg.size = sizes[n];
        dg.unit = 0;
        std::size_t count = x.count(n);
        std::uint64_t order = fc->order;
        dg.mult = [fc, count, order](std::uint32_t a, std::uint32_t b) {
            std::uint64_t ia = a, ib = b, out = 0, mul = 1;
            for (std::size_t c = 0; c < count; ++c) {
                out += fc->add(ia % order, ib % order) * mul;
                ia /= order;
                ib /= order;
                mul *= order;
            }
            return static_cast<std::uint32_t>(out);
        };
        dg.inverse = [fc, count, order](std::uint32_t a) {
            std::uint64_t ia = a, out = 0, mul = 1;
            for (std::size_t c = 0; c < count; ++c) {
                out += fc->neg(ia % order) * mul;
                ia /= order;
                mul *= order;
            }
            return static_cast<std::uint32_t>(out);
        };
        g.groups.push_back(std::move(dg));
    }
    return g;
}

FiniteCubicalGroup group_from_tables(FiniteCubicalSet set,
                                     std::vector<std::vector<std::vector<std::uint32_t>>> tables) {
    std::size_t D = set.dim_bound();
    if (tables.size() != D + 1)
        throw ShapeError("group_from_tables: one multiplication table per degree");
    FiniteCubicalGroup g{std::move(set), {}};
    for (std::size_t n = 0; n <= D; ++n) {
        std::size_t m = g.set.count(n);
        if (m > 4096) throw StructureError("group_from_tables: degree too large for tables");
        auto tab = std::make_shared<std::vector<std::vector<std::uint32_t>>>(std::move(tables[n]));
        if (tab->size() != m) throw ShapeError("group_from_tables: table size mismatch");
        for (const auto& row : *tab) {
            if (row.size() != m) throw ShapeError("group_from_tables: table row size mismatch");
            for (std::uint32_t e : row)
                if (e >= m) throw ShapeError("group_from_tables: entry out of range");
        }
        // unit: unique two-sided identity
        std::uint32_t unit = m;
        for (std::uint32_t e = 0; e < m && unit == m; ++e) {
            bool ok = true;
            for (std::uint32_t a = 0; a < m && ok; ++a)
                if ((*tab)[e][a] != a || (*tab)[a][e] != a) ok = false;
            if (ok) unit = e;
        }
        if (unit == m) throw StructureError("group_from_tables: no unit at degree " + std::to_string(n));
        auto inv = std::make_shared<std::vector<std::uint32_t>>(m, m);
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b)
                if ((*tab)[a][b] == unit && (*tab)[b][a] == unit) (*inv)[a] = b;
        for (std::uint32_t a = 0; a < m; ++a)
            if ((*inv)[a] == m)
                throw StructureError("group_from_tables: missing inverse at degree " +
                                     std::to_string(n));
        DegreeGroup dg;
        dg.size = m;
        dg.unit = unit;
        dg.mult = [tab](std::uint32_t a, std::uint32_t b) { return (*tab)[a][b]; };
        dg.inverse = [inv](std::uint32_t a) { return (*inv)[a]; };
        g.groups.push_back(std::move(dg));
    }
    if (!g.set.basepoint) g.set.basepoint = g.groups[0].unit;
    return g;
}

Report validate_cubical_group(const FiniteCubicalGroup& g) {
    Report r = cubset::validate_cubical_set(g.set);
    r.subject = "finite cubical group";
    std::size_t D = g.dim_bound();
    for (std::size_t n = 0; n <= D; ++n) {
        const DegreeGroup& dg = g.groups[n];
        if (dg.size != g.set.count(n)) {
            r.fail("degree " + std::to_string(n), "group size matches cube count");
            continue;
        }
        if (dg.size <= 512) {  // full associativity check only at table scale
            for (std::uint32_t a = 0; a < dg.size; ++a)
                for (std::uint32_t b = 0; b < dg.size; ++b)
                    for (std::uint32_t c = 0; c < dg.size; ++c)
                        if (dg.mult(dg.mult(a, b), c) != dg.mult(a, dg.mult(b, c))) {
                            r.fail("degree " + std::to_string(n), "associativity");
                            a = b = c = static_cast<std::uint32_t>(dg.size);
                        }
        }
        for (std::uint32_t a = 0; a < dg.size; ++a) {
            if (dg.mult(dg.unit, a) != a || dg.mult(a, dg.unit) != a)
                r.fail("degree " + std::to_string(n), "unit law");
            if (dg.mult(a, dg.inverse(a)) != dg.unit)
                r.fail("degree " + std::to_string(n), "inverse law");
        }
    }
    auto hom_check = [&](std::size_t from, std::size_t to, const std::vector<std::uint32_t>& tab,
                         const std::string& name) {
        const DegreeGroup& a = g.groups[from];
        const DegreeGroup& b = g.groups[to];
        for (std::uint32_t u = 0; u < a.size; ++u)
            for (std::uint32_t v = 0; v < a.size; ++v)
                if (tab[a.mult(u, v)] != b.mult(tab[u], tab[v])) {
                    r.fail(name, "structure map is a homomorphism");
                    return;
                }
    };
    for (std::size_t n = 1; n <= D; ++n)
        for (std::size_t i = 1; i <= n; ++i) {
            hom_check(n, n - 1, g.set.faces[n][i - 1][0], "∂_" + std::to_string(i) + "^0 deg " + std::to_string(n));
            hom_check(n, n - 1, g.set.faces[n][i - 1][1], "∂_" + std::to_string(i) + "^1 deg " + std::to_string(n));
            hom_check(n - 1, n, g.set.degeneracies[n][i - 1], "s_" + std::to_string(i) + " deg " + std::to_string(n));
            if (n + 1 <= D && g.set.has_connections())
                hom_check(n, n + 1, g.set.connections[n][i - 1], "Γ_" + std::to_string(i) + " deg " + std::to_string(n));
        }
    if (!g.set.basepoint || *g.set.basepoint != g.groups[0].unit)
        r.fail("basepoint", "basepoint is the unit of G_0");
    return r;
}

std::vector<std::uint32_t> basepoint_tower(const FiniteCubicalSet& x) {
    if (!x.basepoint) throw StructureError("basepoint required");
    std::vector<std::uint32_t> psi{*x.basepoint};
    for (std::size_t n = 1; n <= x.dim_bound(); ++n) psi.push_back(x.degeneracy(n, 1, psi[n - 1]));
    return psi;
}

Report kan_check(const FiniteCubicalSet& x, std::size_t up_to) {
    Report r{"Kan condition"};
    if (up_to > x.dim_bound()) throw ShapeError("kan_check: up_to exceeds dim bound");
    std::uint64_t boxes = 0;
    for (std::size_t n = 1; n <= up_to; ++n) {
        // slots (j, ε), j = 1..n, ε = 0,1, minus the omitted (i, α)
        for (std::size_t i = 1; i <= n; ++i)
            for (int al = 0; al < 2; ++al) {
                std::vector<std::pair<std::size_t, int>> slots;
                for (std::size_t j = 1; j <= n; ++j)
                    for (int e = 0; e < 2; ++e)
                        if (!(j == i && e == al)) slots.emplace_back(j, e);

                std::vector<std::uint32_t> assign(slots.size(), 0);
                auto compatible = [&](std::size_t upto_slot) {
                    auto [k, om] = slots[upto_slot];
                    for (std::size_t s = 0; s < upto_slot; ++s) {
                        auto [j, e] = slots[s];
                        std::size_t lo = std::min(j, k), hi = std::max(j, k);
                        if (lo == hi) continue;
                        std::uint32_t xl = j < k ? assign[s] : assign[upto_slot];
                        std::uint32_t xh = j < k ? assign[upto_slot] : assign[s];
                        int el = j < k ? e : om, eh = j < k ? om : e;
                        // ∂_lo^el x_hi^eh = ∂_{hi-1}^eh x_lo^el
                        if (x.face(n - 1, lo, el, xh) != x.face(n - 1, hi - 1, eh, xl)) return false;
                    }
                    return true;
                };
                // depth-first odometer with incremental compatibility
                std::size_t pos = 0;
                bool done = slots.empty();
                while (!done) {
                    if (compatible(pos)) {
                        if (pos + 1 == slots.size()) {
                            ++boxes;
                            bool filled = false;
                            for (std::uint32_t z = 0; z < x.count(n) && !filled; ++z) {
                                bool ok = true;
                                for (std::size_t s = 0; s < slots.size() && ok; ++s)
                                    if (x.face(n, slots[s].first, slots[s].second, z) != assign[s])
                                        ok = false;
                                filled = ok;
                            }
                            if (!filled) {
                                std::string box;
                                for (std::size_t s = 0; s < slots.size(); ++s)
                                    box += (s ? ", " : "") + std::to_string(slots[s].first) + "^" +
                                           std::to_string(slots[s].second) + "=" +
                                           x.cube_names[n - 1][assign[s]];
                                r.fail("degree " + std::to_string(n) + ", omitted (" +
                                           std::to_string(i) + "," + std::to_string(al) + ")",
                                       "open box admits a filler", box);
                            }
                        } else {
                            ++pos;
                            continue;
                        }
                    }
                    // advance odometer at pos
                    for (;;) {
                        if (assign[pos] + 1 < x.count(n - 1)) {
                            ++assign[pos];
                            break;
                        }
                        assign[pos] = 0;
                        if (pos == 0) {
                            done = true;
                            break;
                        }
                        --pos;
                    }
                }
                if (slots.empty()) {
                    // n = 0 never happens (n >= 1): a box always has slots
                }
            }
    }
    r.note("open boxes enumerated: " + std::to_string(boxes));
    return r;
}

namespace {

std::vector<std::uint32_t> ztilde_set(const FiniteCubicalSet& x,
                                      const std::vector<std::uint32_t>& psi, std::size_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < x.count(n); ++c) {
        bool ok = true;
        for (std::size_t j = 1; j <= n && ok; ++j)
            for (int e = 0; e < 2; ++e)
                if (x.face(n, j, e, c) != psi[n - 1]) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(c);
    }
    return out;
}

// partition of ztilde via z with ∂_1^0 z = x, ∂_1^1 z = y, other faces ψ
// (first-column form); last_column flips to ∂_{n+1}.
std::pair<std::vector<std::uint32_t>, std::size_t> pi_partition(
    const FiniteCubicalSet& x, const std::vector<std::uint32_t>& psi, std::size_t n,
    const std::vector<std::uint32_t>& zt, bool last_column) {
    std::vector<std::uint32_t> where(x.count(n), UINT32_MAX);
    for (std::size_t k = 0; k < zt.size(); ++k) where[zt[k]] = static_cast<std::uint32_t>(k);
    UnionFind uf(zt.size());
    std::size_t main_i = last_column ? n + 1 : 1;
    for (std::uint32_t z = 0; z < x.count(n + 1); ++z) {
        bool ok = true;
        for (std::size_t j = 1; j <= n + 1 && ok; ++j)
            for (int e = 0; e < 2; ++e)
                if (j != main_i && x.face(n + 1, j, e, z) != psi[n]) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        std::uint32_t a = x.face(n + 1, main_i, 0, z);
        std::uint32_t b = x.face(n + 1, main_i, 1, z);
        if (where[a] == UINT32_MAX || where[b] == UINT32_MAX) continue;
        uf.unite(where[a], where[b]);
    }
    return classes_from(uf, zt.size());
}

}  // namespace

std::vector<std::uint32_t> pi_partition_last_column(const FiniteCubicalSet& x, std::size_t n) {
    auto psi = basepoint_tower(x);
    auto zt = ztilde_set(x, psi, n);
    return pi_partition(x, psi, n, zt, true).first;
}

HomotopyGroupResult pi(const FiniteCubicalSet& x, std::size_t n) {
    if (n + 1 > x.dim_bound())
        throw StructureError("pi: certified degrees need fillers in degree n+1 <= dim bound");
    Report kan = kan_check(x, n + 1);
    if (!kan.passed()) throw StructureError("pi: input is not Kan up to degree " + std::to_string(n + 1));

    auto psi = basepoint_tower(x);
    HomotopyGroupResult out;
    out.degree = n;
    out.ztilde = ztilde_set(x, psi, n);
    auto [cls, count] = pi_partition(x, psi, n, out.ztilde, false);
    out.class_of = cls;
    out.class_count = count;
    for (std::size_t k = 0; k < out.ztilde.size(); ++k)
        if (out.ztilde[k] == psi[n]) out.basepoint_class = out.class_of[k];

    if (n >= 1) {
        std::vector<std::uint32_t> where(x.count(n), UINT32_MAX);
        for (std::size_t k = 0; k < out.ztilde.size(); ++k)
            where[out.ztilde[k]] = static_cast<std::uint32_t>(k);
        std::vector<std::vector<std::uint32_t>> table(count,
                                                      std::vector<std::uint32_t>(count, UINT32_MAX));
        // every filler of the product shape contributes; ambiguity is an error
        for (std::uint32_t z = 0; z < x.count(n + 1); ++z) {
            bool ok = true;
            for (std::size_t j = 2; j <= n + 1 && ok; ++j)
                if (x.face(n + 1, j, 0, z) != psi[n]) ok = false;
            for (std::size_t j = 3; j <= n + 1 && ok; ++j)
                if (x.face(n + 1, j, 1, z) != psi[n]) ok = false;
            if (!ok) continue;
            std::uint32_t xx = x.face(n + 1, 1, 0, z);
            std::uint32_t yy = x.face(n + 1, 2, 1, z);
            std::uint32_t res = x.face(n + 1, 1, 1, z);
            if (xx >= where.size() || where[xx] == UINT32_MAX || where[yy] == UINT32_MAX ||
                where[res] == UINT32_MAX)
                continue;
            std::uint32_t ca = out.class_of[where[xx]], cb = out.class_of[where[yy]],
                          cr = out.class_of[where[res]];
            if (table[ca][cb] == UINT32_MAX)
                table[ca][cb] = cr;
            else if (table[ca][cb] != cr)
                throw Error("pi: filler product is not well-defined (non-Kan input?)");
        }
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = 0; b < count; ++b)
                if (table[a][b] == UINT32_MAX)
                    throw Error("pi: missing product filler despite Kan condition");
        out.product = std::move(table);
    }
    if (out.product) {
        bool ab = true;
        for (std::size_t a = 0; a < count && ab; ++a)
            for (std::size_t b = 0; b < a; ++b)
                if ((*out.product)[a][b] != (*out.product)[b][a]) {
                    ab = false;
                    break;
                }
        if (ab) out.abelian_form = group_from_class_table(*out.product);
    }
    return out;
}

HomotopyGroupResult pi(const FiniteCubicalGroup& g, std::size_t n) {
    HomotopyGroupResult out = pi(g.set, n);
    if (n == 0) {
        // pointwise product descends to classes for a cubical group
        std::size_t count = out.class_count;
        std::vector<std::vector<std::uint32_t>> table(count,
                                                      std::vector<std::uint32_t>(count, UINT32_MAX));
        std::vector<std::uint32_t> where(g.set.count(0), UINT32_MAX);
        for (std::size_t k = 0; k < out.ztilde.size(); ++k)
            where[out.ztilde[k]] = static_cast<std::uint32_t>(k);
        for (std::uint32_t a : out.ztilde)
            for (std::uint32_t b : out.ztilde) {
                std::uint32_t ca = out.class_of[where[a]], cb = out.class_of[where[b]];
                std::uint32_t cr = out.class_of[where[g.groups[0].mult(a, b)]];
                if (table[ca][cb] == UINT32_MAX)
                    table[ca][cb] = cr;
                else if (table[ca][cb] != cr)
                    throw Error("pi: class product of the group is not well-defined");
            }
        out.product = std::move(table);
        bool ab = true;
        for (std::size_t a = 0; a < count && ab; ++a)
            for (std::size_t b = 0; b < a; ++b)
                if ((*out.product)[a][b] != (*out.product)[b][a]) ab = false;
        if (ab) out.abelian_form = group_from_class_table(*out.product);
    }
    return out;
}

MooreGroupComplex moore_group_complex(const FiniteCubicalGroup& g) {
    MooreGroupComplex out;
    out.report.subject = "Moore complex of a cubical group";
    std::size_t D = g.dim_bound();

    for (std::size_t n = 0; n <= D; ++n) {
        std::vector<std::uint32_t> mn;
        for (std::uint32_t c = 0; c < g.set.count(n); ++c) {
            bool ok = true;
            for (std::size_t i = 1; i <= n && ok; ++i)
                if (g.set.face(n, i, 1, c) != g.groups[n - 1].unit) ok = false;
            for (std::size_t i = 1; i + 1 <= n && ok; ++i)
                if (g.set.face(n, i, 0, c) != g.groups[n - 1].unit) ok = false;
            if (ok) mn.push_back(c);
        }
        out.m.push_back(std::move(mn));
    }

    // (a) ∂_{n+1}^0(M_{n+1}) ⊆ M_n ; (b) composite trivial ; (c) normality
    for (std::size_t n = 0; n + 1 <= D; ++n) {
        std::vector<bool> in_mn(g.set.count(n), false);
        for (std::uint32_t c : out.m[n]) in_mn[c] = true;
        for (std::uint32_t y : out.m[n + 1]) {
            std::uint32_t img = g.set.face(n + 1, n + 1, 0, y);
            if (!in_mn[img]) out.report.fail("degree " + std::to_string(n), "(a) boundary lands in M");
            if (n >= 1 && g.set.face(n, n, 0, img) != g.groups[n - 1].unit)
                out.report.fail("degree " + std::to_string(n), "(b) composite trivial");
        }
        std::vector<std::uint32_t> b;
        {
            std::vector<bool> seen(g.set.count(n), false);
            for (std::uint32_t y : out.m[n + 1]) {
                std::uint32_t img = g.set.face(n + 1, n + 1, 0, y);
                if (!seen[img]) {
                    seen[img] = true;
                    b.push_back(img);
                }
            }
            std::sort(b.begin(), b.end());
        }
        std::vector<bool> in_b(g.set.count(n), false);
        for (std::uint32_t e : b) in_b[e] = true;
        auto normal_in = [&](const std::vector<std::uint32_t>& ambient) {
            for (std::uint32_t z : ambient)
                for (std::uint32_t e : b) {
                    std::uint32_t conj =
                        g.groups[n].mult(g.groups[n].mult(z, e), g.groups[n].inverse(z));
                    if (!in_b[conj]) return false;
                }
            return true;
        };
        std::vector<std::uint32_t> all(g.set.count(n));
        std::iota(all.begin(), all.end(), 0);
        if (!normal_in(out.m[n]))
            out.report.fail("degree " + std::to_string(n), "(c) image normal in M_n");
        if (!normal_in(all)) out.report.fail("degree " + std::to_string(n), "(c) image normal in G_n");
        // proof witness: conjugation via s_{n+1}
        for (std::uint32_t y : out.m[n + 1])
            for (std::uint32_t z = 0; z < g.set.count(n); ++z) {
                std::uint32_t sz = g.set.degeneracy(n + 1, n + 1, z);
                std::uint32_t u = g.groups[n + 1].mult(g.groups[n + 1].mult(sz, y),
                                                       g.groups[n + 1].inverse(sz));
                bool in_m = true;
                for (std::size_t i = 1; i <= n + 1 && in_m; ++i)
                    if (g.set.face(n + 1, i, 1, u) != g.groups[n].unit) in_m = false;
                for (std::size_t i = 1; i + 1 <= n + 1 && in_m; ++i)
                    if (g.set.face(n + 1, i, 0, u) != g.groups[n].unit) in_m = false;
                std::uint32_t lhs = g.set.face(n + 1, n + 1, 0, u);
                std::uint32_t rhs = g.groups[n].mult(
                    g.groups[n].mult(z, g.set.face(n + 1, n + 1, 0, y)), g.groups[n].inverse(z));
                if (!in_m || lhs != rhs) {
                    out.report.fail("degree " + std::to_string(n), "(c) conjugation witness");
                    z = static_cast<std::uint32_t>(g.set.count(n));
                }
            }
    }

    for (std::size_t n = 0; n <= D; ++n) {
        MooreGroupComplex::Level level;
        if (n == 0) {
            level.z = out.m[0];
        } else {
            for (std::uint32_t c : out.m[n])
                if (g.set.face(n, n, 0, c) == g.groups[n - 1].unit) level.z.push_back(c);
        }
        if (n + 1 <= D) {
            std::vector<bool> seen(g.set.count(n), false);
            for (std::uint32_t y : out.m[n + 1]) {
                std::uint32_t img = g.set.face(n + 1, n + 1, 0, y);
                if (!seen[img]) {
                    seen[img] = true;
                    level.b.push_back(img);
                }
            }
            std::sort(level.b.begin(), level.b.end());
            level.certified = true;
        } else {
            level.b = {g.groups[n].unit};
            level.certified = false;
        }
        // coset partition: x ~ y iff x y^{-1} ∈ B_n
        std::vector<bool> in_b(g.set.count(n), false);
        for (std::uint32_t e : level.b) in_b[e] = true;
        UnionFind uf(level.z.size());
        for (std::size_t a = 0; a < level.z.size(); ++a)
            for (std::size_t c = 0; c < a; ++c)
                if (in_b[g.groups[n].mult(level.z[a], g.groups[n].inverse(level.z[c]))])
                    uf.unite(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c));
        auto [cls, cnt] = classes_from(uf, level.z.size());
        level.class_of = cls;
        level.classes = cnt;
        // abelian quotient form when the class table is abelian
        std::vector<std::uint32_t> where(g.set.count(n), UINT32_MAX);
        for (std::size_t k = 0; k < level.z.size(); ++k)
            where[level.z[k]] = static_cast<std::uint32_t>(k);
        std::vector<std::vector<std::uint32_t>> table(cnt, std::vector<std::uint32_t>(cnt, UINT32_MAX));
        bool consistent = true;
        for (std::uint32_t a : level.z)
            for (std::uint32_t c : level.z) {
                std::uint32_t prod = g.groups[n].mult(a, c);
                if (where[prod] == UINT32_MAX) {
                    consistent = false;
                    continue;
                }
                std::uint32_t &cell = table[level.class_of[where[a]]][level.class_of[where[c]]];
                std::uint32_t val = level.class_of[where[prod]];
                if (cell == UINT32_MAX) cell = val;
                else if (cell != val) consistent = false;
            }
        if (consistent) {
            bool ab = true;
            for (std::size_t a = 0; a < cnt && ab; ++a)
                for (std::size_t c = 0; c < a; ++c)
                    if (table[a][c] != table[c][a]) ab = false;
            if (ab && cnt > 0) level.abelian_form = group_from_class_table(table);
        }
        out.homology.push_back(std::move(level));
    }
    return out;
}

Report verify_pi_vs_moore(const FiniteCubicalGroup& g, std::size_t n) {
    Report r{"π_n vs H_n(M(G)) at n = " + std::to_string(n)};
    Report kan = kan_check(g.set, n + 1);
    if (!kan.passed()) {
        r.absorb(kan);
        return r;
    }
    HomotopyGroupResult p = pi(g, n);
    MooreGroupComplex mc = moore_group_complex(g);
    if (!mc.report.passed()) r.absorb(mc.report);

    // Z̃_n = Z_n M(G) as sets
    if (p.ztilde != mc.homology[n].z) {
        r.fail("degree " + std::to_string(n), "Z̃ = Z(M)");
        return r;
    }
    // x ~ y iff x y^{-1} ∈ B_n: identical partitions
    auto same_partition = [](const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return false;
        std::map<std::uint32_t, std::uint32_t> fwd, bwd;
        for (std::size_t k = 0; k < a.size(); ++k) {
            auto f = fwd.emplace(a[k], b[k]);
            if (!f.second && f.first->second != b[k]) return false;
            auto w = bwd.emplace(b[k], a[k]);
            if (!w.second && w.first->second != a[k]) return false;
        }
        return true;
    };
    if (!same_partition(p.class_of, mc.homology[n].class_of))
        r.fail("degree " + std::to_string(n), "~ matches B-cosets");
    // the two displayed forms of ~ agree
    if (!same_partition(p.class_of, pi_partition_last_column(g.set, n)))
        r.fail("degree " + std::to_string(n), "first-column ~ = last-column ~");
    // [x]•[y] = [xy]
    if (p.product) {
        std::vector<std::uint32_t> where(g.set.count(n), UINT32_MAX);
        for (std::size_t k = 0; k < p.ztilde.size(); ++k)
            where[p.ztilde[k]] = static_cast<std::uint32_t>(k);
        for (std::uint32_t a : p.ztilde)
            for (std::uint32_t b : p.ztilde) {
                std::uint32_t prod = g.groups[n].mult(a, b);
                std::uint32_t lhs = (*p.product)[p.class_of[where[a]]][p.class_of[where[b]]];
                if (where[prod] == UINT32_MAX || lhs != p.class_of[where[prod]]) {
                    r.fail("degree " + std::to_string(n), "[x]•[y] = [xy]");
                    a = static_cast<std::uint32_t>(g.set.count(n));
                    break;
                }
            }
        if (n >= 1) {
            for (std::size_t a = 0; a < p.class_count; ++a)
                for (std::size_t b = 0; b < a; ++b)
                    if ((*p.product)[a][b] != (*p.product)[b][a])
                        r.fail("degree " + std::to_string(n), "π_n abelian");
        }
        // Eckmann-Hilton interchange between • (fillers) and * (pointwise):
        // with coinciding tables this is (a•b)*(c•d) = (a*c)•(b*d) on classes
        const auto& tab = *p.product;
        bool interchange = true;
        for (std::size_t a = 0; a < p.class_count && interchange; ++a)
            for (std::size_t b = 0; b < p.class_count && interchange; ++b)
                for (std::size_t cc = 0; cc < p.class_count && interchange; ++cc)
                    for (std::size_t d = 0; d < p.class_count; ++d)
                        if (tab[tab[a][b]][tab[cc][d]] != tab[tab[a][cc]][tab[b][d]]) {
                            interchange = false;
                            break;
                        }
        if (!interchange) r.fail("degree " + std::to_string(n), "interchange law (Lemma 2.7)");
        // common unit
        for (std::size_t a = 0; a < p.class_count; ++a)
            if (tab[p.basepoint_class][a] != a || tab[a][p.basepoint_class] != a)
                r.fail("degree " + std::to_string(n), "basepoint class is the unit");
    }
    // Cor 2.9 for abelian groups with connections
    bool abelian = true;
    for (const auto& dg : g.groups)
        if (!is_abelian(dg)) abelian = false;
    if (abelian && g.set.has_connections() && n + 1 <= g.dim_bound()) {
        cubical::CubicalObject obj = cubical_object_from_abelian_group(g);
        auto nres = norm::normalize(obj, norm::Variant::N);
        FgAbGroup hn = chain::homology(nres.complex, n).group;
        if (!mc.homology[n].abelian_form)
            r.fail("degree " + std::to_string(n), "H_n(M) abelian form available");
        else if (!mc.homology[n].abelian_form->isomorphic(hn))
            r.fail("degree " + std::to_string(n), "H_n(M(G)) = H_n(N(G))",
                   mc.homology[n].abelian_form->canonical_name() + " vs " + hn.canonical_name());
        else
            r.note("H_n(M) = H_n(N) = " + hn.canonical_name());
        if (p.abelian_form && !p.abelian_form->isomorphic(hn))
            r.fail("degree " + std::to_string(n), "π_n = H_n(N(G))");
    }
    return r;
}

cubical::CubicalObject cubical_object_from_abelian_group(const FiniteCubicalGroup& g) {
    for (const auto& dg : g.groups)
        if (!is_abelian(dg)) throw StructureError("cubical_object_from_abelian_group: nonabelian");
    std::size_t D = g.dim_bound();
    std::vector<FgAbGroup> groups;
    for (std::size_t n = 0; n <= D; ++n) {
        std::size_t m = g.set.count(n);
        IntMatrix rel(m, m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                std::size_t col = a * m + b;
                rel.at(a, col) += 1;
                rel.at(b, col) += 1;
                rel.at(g.groups[n].mult(static_cast<std::uint32_t>(a),
                                        static_cast<std::uint32_t>(b)),
                       col) -= 1;
            }
        groups.push_back(FgAbGroup(m, exactalg::column_lattice_basis(rel)));
    }
    auto table_hom = [&](std::size_t from, std::size_t to, const std::vector<std::uint32_t>& tab) {
        IntMatrix m(groups[to].generators(), groups[from].generators());
        for (std::size_t c = 0; c < tab.size(); ++c) m.at(tab[c], c) = 1;
        return exactalg::Hom(groups[from], groups[to], m);
    };
    cubical::CubicalObject out;
    out.level = g.set.has_connections() ? cubical::Level::cc : cubical::Level::cubical;
    out.groups = groups;
    out.face_maps.resize(D + 1);
    out.degeneracy_maps.resize(D + 1);
    if (D >= 2 && g.set.has_connections()) out.connection_maps.resize(D);
    for (std::size_t n = 1; n <= D; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            out.face_maps[n].push_back({table_hom(n, n - 1, g.set.faces[n][i - 1][0]),
                                        table_hom(n, n - 1, g.set.faces[n][i - 1][1])});
            out.degeneracy_maps[n].push_back(table_hom(n - 1, n, g.set.degeneracies[n][i - 1]));
        }
        if (n + 1 <= D && g.set.has_connections())
            for (std::size_t i = 1; i <= n; ++i)
                out.connection_maps[n].push_back(table_hom(n, n + 1, g.set.connections[n][i - 1]));
    }
    return out;
}

}  // namespace mbx::homotopy
