#include "core/cubset.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"

namespace mbx::cubset {

using exactalg::Hom;
using exactalg::IntMatrix;

Poset make_poset(std::vector<std::string> elements,
                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::size_t n = elements.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw ShapeError("poset: pair index out of range");
        leq[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)  // transitive closure
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq[i][j] && leq[j][i])
                throw StructureError("poset: antisymmetry violated between " + elements[i] +
                                     " and " + elements[j]);
    return {std::move(elements), std::move(leq)};
}

Poset chain_poset(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        if (i + 1 < n) pairs.emplace_back(i, i + 1);
    }
    return make_poset(std::move(names), pairs);
}

Poset antichain_poset(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    return make_poset(std::move(names), {});
}

namespace {

// A degree-n cube of the poset set is a monotone map {0,1}^n -> p, stored
// as the value vector over the 2^n vertices; vertex v has coordinates
// t_i = (v >> (i-1)) & 1.
using Cube = std::vector<std::uint8_t>;

bool vertex_leq(std::uint32_t u, std::uint32_t v) { return (u & v) == u; }

// Lexicographic enumeration over value vectors, pruning against assigned
// comparable vertices.
void enumerate_monotone(const Poset& p, std::size_t n, std::vector<Cube>& out,
                        std::size_t limit) {
    std::size_t verts = std::size_t{1} << n;
    Cube value(verts, 0);
    auto rec = [&](auto&& self, std::uint32_t pos) -> void {
        if (pos == verts) {
            out.push_back(value);
            if (out.size() > limit)
                throw StructureError("poset cubical set: cube count limit exceeded");
            return;
        }
        for (std::size_t val = 0; val < p.size(); ++val) {
            value[pos] = static_cast<std::uint8_t>(val);
            bool ok = true;
            for (std::uint32_t u = 0; u < pos && ok; ++u) {
                if (vertex_leq(u, pos) && !p.leq[value[u]][val]) ok = false;
                if (vertex_leq(pos, u) && !p.leq[val][value[u]]) ok = false;
            }
            if (ok) self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

std::string cube_name(const Poset& p, const Cube& c) {
    std::string s;
    for (std::uint8_t v : c) s += p.elements[v];
    return s;
}

Cube face_of(const Cube& c, std::size_t n, std::size_t i, int a) {
    // (∂_i^a f)(t_1..t_{n-1}) = f(t_1,..,t_{i-1}, a, t_i,..,t_{n-1})
    std::size_t verts = std::size_t{1} << (n - 1);
    Cube out(verts);
    std::uint32_t low_mask = (std::uint32_t{1} << (i - 1)) - 1;
    for (std::uint32_t v = 0; v < verts; ++v) {
        std::uint32_t w = (v & low_mask) | (static_cast<std::uint32_t>(a) << (i - 1)) |
                          ((v & ~low_mask) << 1);
        out[v] = c[w];
    }
    return out;
}

Cube degeneracy_of(const Cube& c, std::size_t n, std::size_t i) {
    // (s_i f)(t_1..t_n) = f with coordinate i deleted
    std::size_t verts = std::size_t{1} << n;
    Cube out(verts);
    std::uint32_t low_mask = (std::uint32_t{1} << (i - 1)) - 1;
    for (std::uint32_t v = 0; v < verts; ++v) {
        std::uint32_t w = (v & low_mask) | ((v >> 1) & ~low_mask);
        out[v] = c[w];
    }
    return out;
}

Cube connection_of(const Cube& c, std::size_t n, std::size_t i) {
    // (Γ_i f)(t_1..t_{n+1}) = f(..., max(t_i, t_{i+1}), ...)
    std::size_t verts = std::size_t{1} << (n + 1);
    Cube out(verts);
    std::uint32_t low_mask = (std::uint32_t{1} << (i - 1)) - 1;
    for (std::uint32_t v = 0; v < verts; ++v) {
        std::uint32_t ti = (v >> (i - 1)) & 1, ti1 = (v >> i) & 1;
        std::uint32_t m = ti | ti1;
        std::uint32_t w = (v & low_mask) | (m << (i - 1)) | ((v >> (i + 1)) << i);
        out[v] = c[w];
    }
    return out;
}

}  // namespace

std::uint64_t count_monotone_maps_brute(const Poset& p, std::size_t n) {
    std::size_t verts = std::size_t{1} << n;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < verts; ++k) total *= p.size();  // |p|^(2^n)
    std::uint64_t count = 0;
    std::vector<std::uint8_t> value(verts);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t k = 0; k < verts; ++k) {
            value[k] = static_cast<std::uint8_t>(c % p.size());
            c /= p.size();
        }
        bool mono = true;
        for (std::uint32_t v = 0; v < verts && mono; ++v)
            for (std::uint32_t u = 0; u < verts; ++u)
                if (vertex_leq(u, v) && !p.leq[value[u]][value[v]]) {
                    mono = false;
                    break;
                }
        if (mono) ++count;
    }
    return count;
}

FiniteCubicalSet poset_cubical_set(const Poset& p, std::size_t dim_bound,
                                   std::size_t max_cubes_per_degree) {
    if (p.size() == 0) throw StructureError("poset cubical set: empty poset");
    FiniteCubicalSet x;
    std::vector<std::vector<Cube>> cubes(dim_bound + 1);
    std::vector<std::map<Cube, std::uint32_t>> index(dim_bound + 1);
    for (std::size_t n = 0; n <= dim_bound; ++n) {
        enumerate_monotone(p, n, cubes[n], max_cubes_per_degree);
        std::sort(cubes[n].begin(), cubes[n].end());
        x.cube_names.emplace_back();
        for (std::uint32_t k = 0; k < cubes[n].size(); ++k) {
            index[n][cubes[n][k]] = k;
            x.cube_names[n].push_back(cube_name(p, cubes[n][k]));
        }
    }

    x.faces.resize(dim_bound + 1);
    x.degeneracies.resize(dim_bound + 1);
    if (dim_bound >= 2) x.connections.resize(dim_bound);
    for (std::size_t n = 1; n <= dim_bound; ++n) {
        x.faces[n].resize(n);
        x.degeneracies[n].resize(n);
        for (std::size_t i = 1; i <= n; ++i) {
            for (int a = 0; a < 2; ++a) {
                auto& tab = x.faces[n][i - 1][a];
                tab.resize(cubes[n].size());
                for (std::uint32_t k = 0; k < cubes[n].size(); ++k)
                    tab[k] = index[n - 1].at(face_of(cubes[n][k], n, i, a));
            }
            auto& stab = x.degeneracies[n][i - 1];
            stab.resize(cubes[n - 1].size());
            for (std::uint32_t k = 0; k < cubes[n - 1].size(); ++k)
                stab[k] = index[n].at(degeneracy_of(cubes[n - 1][k], n, i));
        }
        if (n + 1 <= dim_bound) {
            x.connections[n].resize(n);
            for (std::size_t i = 1; i <= n; ++i) {
                auto& gtab = x.connections[n][i - 1];
                gtab.resize(cubes[n].size());
                for (std::uint32_t k = 0; k < cubes[n].size(); ++k)
                    gtab[k] = index[n + 1].at(connection_of(cubes[n][k], n, i));
            }
        }
    }
    x.basepoint = 0;
    return x;
}

Report validate_cubical_set(const FiniteCubicalSet& x) {
    Report r{"finite cubical set"};
    std::size_t D = x.dim_bound();

    auto scan = [&](std::size_t n, std::size_t count, const std::string& identity,
                    const std::string& where, auto&& lhs, auto&& rhs) {
        for (std::uint32_t c = 0; c < count; ++c)
            if (lhs(c) != rhs(c)) {
                r.fail(where, identity, "first offending cube index " + std::to_string(c));
                return;
            }
        (void)n;
    };

    for (std::size_t n = 2; n <= D; ++n)
        for (std::size_t j = 2; j <= n; ++j)
            for (std::size_t i = 1; i < j; ++i)
                for (int a = 0; a < 2; ++a)
                    for (int e = 0; e < 2; ++e)
                        scan(n, x.count(n), "∂∂ exchange",
                             "degree " + std::to_string(n) + ", i=" + std::to_string(i) +
                                 " j=" + std::to_string(j),
                             [&](std::uint32_t c) { return x.face(n - 1, i, a, x.face(n, j, e, c)); },
                             [&](std::uint32_t c) {
                                 return x.face(n - 1, j - 1, e, x.face(n, i, a, c));
                             });

    for (std::size_t n = 1; n <= D; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n; ++i)
                for (int a = 0; a < 2; ++a)
                    scan(n, x.count(n - 1), "∂s case split",
                         "degree " + std::to_string(n) + ", i=" + std::to_string(i) +
                             " j=" + std::to_string(j),
                         [&](std::uint32_t c) { return x.face(n, i, a, x.degeneracy(n, j, c)); },
                         [&](std::uint32_t c) -> std::uint32_t {
                             if (i < j) return x.degeneracy(n - 1, j - 1, x.face(n - 1, i, a, c));
                             if (i == j) return c;
                             return x.degeneracy(n - 1, j, x.face(n - 1, i - 1, a, c));
                         });

    for (std::size_t m = 2; m <= D; ++m)
        for (std::size_t j = 1; j <= m - 1; ++j)
            for (std::size_t i = 1; i <= j; ++i)
                scan(m, x.count(m - 2), "ss exchange", "degree " + std::to_string(m),
                     [&](std::uint32_t c) { return x.degeneracy(m, i, x.degeneracy(m - 1, j, c)); },
                     [&](std::uint32_t c) {
                         return x.degeneracy(m, j + 1, x.degeneracy(m - 1, i, c));
                     });

    if (!x.has_connections()) return r;

    for (std::size_t n = 1; n + 1 <= D; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n + 1; ++i)
                for (int a = 0; a < 2; ++a)
                    scan(n, x.count(n), "∂Γ case split",
                         "degree " + std::to_string(n) + ", i=" + std::to_string(i) +
                             " j=" + std::to_string(j) + " a=" + std::to_string(a),
                         [&](std::uint32_t c) { return x.face(n + 1, i, a, x.connection(n, j, c)); },
                         [&](std::uint32_t c) -> std::uint32_t {
                             if (i < j) return x.connection(n - 1, j - 1, x.face(n, i, a, c));
                             if (i == j || i == j + 1)
                                 return a == 0 ? c : x.degeneracy(n, j, x.face(n, j, 1, c));
                             return x.connection(n - 1, j, x.face(n, i - 1, a, c));
                         });

    for (std::size_t n = 1; n + 2 <= D; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= j; ++i)
                scan(n, x.count(n), "ΓΓ exchange", "degree " + std::to_string(n),
                     [&](std::uint32_t c) { return x.connection(n + 1, i, x.connection(n, j, c)); },
                     [&](std::uint32_t c) {
                         return x.connection(n + 1, j + 1, x.connection(n, i, c));
                     });

    for (std::size_t n = 1; n + 1 <= D; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n; ++i)
                scan(n, x.count(n - 1), "Γs case split", "degree " + std::to_string(n),
                     [&](std::uint32_t c) { return x.connection(n, i, x.degeneracy(n, j, c)); },
                     [&](std::uint32_t c) -> std::uint32_t {
                         if (i < j) return x.degeneracy(n + 1, j + 1, x.connection(n - 1, i, c));
                         if (i == j) return x.degeneracy(n + 1, i, x.degeneracy(n, i, c));
                         return x.degeneracy(n + 1, j, x.connection(n - 1, i - 1, c));
                     });

    return r;
}

cubical::CubicalObject linearize(const FiniteCubicalSet& x, const FgAbGroup& coeff) {
    cubical::CubicalObject out;
    out.level = cubical::Level::cc;
    std::size_t D = x.dim_bound();
    std::vector<FgAbGroup> spans;
    for (std::size_t n = 0; n <= D; ++n)
        spans.push_back(exactalg::direct_power(coeff, x.count(n)).group);
    out.groups = spans;

    std::size_t cg = coeff.generators();
    auto table_hom = [&](std::size_t from_deg, std::size_t to_deg,
                         const std::vector<std::uint32_t>& tab) {
        IntMatrix m(spans[to_deg].generators(), spans[from_deg].generators());
        for (std::uint32_t c = 0; c < tab.size(); ++c)
            for (std::size_t k = 0; k < cg; ++k) m.at(tab[c] * cg + k, c * cg + k) = 1;
        return Hom(spans[from_deg], spans[to_deg], m);
    };

    out.face_maps.resize(D + 1);
    out.degeneracy_maps.resize(D + 1);
    if (D >= 2) out.connection_maps.resize(D);
    for (std::size_t n = 1; n <= D; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            out.face_maps[n].push_back({table_hom(n, n - 1, x.faces[n][i - 1][0]),
                                        table_hom(n, n - 1, x.faces[n][i - 1][1])});
            out.degeneracy_maps[n].push_back(table_hom(n - 1, n, x.degeneracies[n][i - 1]));
        }
        if (n + 1 <= D && x.has_connections())
            for (std::size_t i = 1; i <= n; ++i)
                out.connection_maps[n].push_back(table_hom(n, n + 1, x.connections[n][i - 1]));
    }
    return out;
}

}  // namespace mbx::cubset
