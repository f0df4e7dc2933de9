#include "core/jsonio.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace mbx::io {

using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::Int;
using exactalg::IntMatrix;

json encode(const Int& v) { return v.str(); }

Int decode_int(const json& j) {
    try {
        if (j.is_number_integer()) return Int(j.get<long long>());
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad integer: ") + e.what());
    }
    throw ParseError("expected integer or decimal string, got " + j.dump());
}

json encode(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", json::array()}};
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix decode_matrix(const json& j) {
    if (j.is_object()) {
        IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
        const json& data = j.at("data");
        for (std::size_t i = 0; i < data.size(); ++i)
            for (std::size_t c = 0; c < data[i].size(); ++c) m.at(i, c) = decode_int(data[i][c]);
        return m;
    }
    if (!j.is_array()) throw ParseError("matrix: expected array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw ParseError("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = decode_int(j[i][c]);
    }
    return m;
}

json encode(const FgAbGroup& g) {
    json rels = json::array();
    for (std::size_t c = 0; c < g.relations().cols(); ++c) {
        json rel = json::array();
        for (std::size_t i = 0; i < g.generators(); ++i) rel.push_back(encode(g.relations().at(i, c)));
        rels.push_back(std::move(rel));
    }
    json torsion = json::array();
    for (const Int& t : g.invariant_factors()) torsion.push_back(encode(t));
    return json{{"kind", "group"},
                {"generators", g.generators()},
                {"relations", rels},
                {"canonical", json{{"free_rank", g.free_rank()}, {"torsion", torsion}}}};
}

FgAbGroup decode_group(const json& j) {
    if (j.is_string()) return parse_group(j.get<std::string>());
    if (!j.is_object()) throw ParseError("group: expected object or shorthand string");
    if (j.contains("generators")) {
        std::size_t n = j.at("generators").get<std::size_t>();
        const json& rels = j.value("relations", json::array());
        IntMatrix m(n, rels.size());
        for (std::size_t c = 0; c < rels.size(); ++c) {
            if (rels[c].size() != n)
                throw ParseError("group: relation vector length must equal generator count");
            for (std::size_t i = 0; i < n; ++i) m.at(i, c) = decode_int(rels[c][i]);
        }
        return FgAbGroup(n, m);
    }
    if (j.contains("free_rank") || j.contains("torsion")) {
        std::size_t r = j.value("free_rank", 0);
        std::vector<Int> torsion;
        for (const auto& t : j.value("torsion", json::array())) torsion.push_back(decode_int(t));
        return FgAbGroup::from_invariants(r, torsion);
    }
    throw ParseError("group: need generators/relations or free_rank/torsion");
}

FgAbGroup parse_group(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("group: empty");
    if (s[0] == '{') return decode_group(parse_json(text));
    if (s == "0") return FgAbGroup::trivial();

    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw ParseError("group: empty term in " + text);
        if (term == "Z") {
            ++free_rank;
        } else if (term.rfind("Z^", 0) == 0) {
            try {
                long long k = std::stoll(term.substr(2));
                if (k < 0) throw ParseError("group: negative rank");
                free_rank += static_cast<std::size_t>(k);
            } catch (const std::invalid_argument&) {
                throw ParseError("group: bad rank in " + term);
            }
        } else if (term.rfind("Z/", 0) == 0) {
            Int d;
            try {
                d = Int(term.substr(2));
            } catch (const std::exception&) {
                throw ParseError("group: bad torsion in " + term);
            }
            if (d < 0) throw ParseError("group: negative torsion order");
            if (d == 0)
                ++free_rank;  // Z/0 = Z
            else if (d > 1)
                torsion.push_back(d);
            // Z/1 contributes nothing
        } else {
            throw ParseError("group: cannot parse term '" + term + "'");
        }
    }
    return FgAbGroup::from_invariants(free_rank, torsion);
}

json encode(const Hom& h) {
    return json{{"kind", "hom"},
                {"source", encode(h.source())},
                {"target", encode(h.target())},
                {"matrix", encode(h.matrix())}};
}

Hom decode_hom(const json& j) {
    FgAbGroup source = decode_group(j.at("source"));
    FgAbGroup target = decode_group(j.at("target"));
    IntMatrix m = decode_matrix(j.at("matrix"));
    if (m.rows() == 0 && m.cols() == 0 &&
        (target.generators() == 0 || source.generators() == 0))
        m = IntMatrix(target.generators(), source.generators());
    return Hom(std::move(source), std::move(target), std::move(m));
}

namespace {

Hom hom_between(const FgAbGroup& source, const FgAbGroup& target, const json& j) {
    IntMatrix m = decode_matrix(j);
    if (m.rows() == 0 && m.cols() == 0) m = IntMatrix(target.generators(), source.generators());
    if (m.rows() != target.generators() || m.cols() != source.generators())
        throw ParseError("matrix shape disagrees with the declared groups");
    return Hom(source, target, m);
}

}  // namespace

json encode(const chain::ChainComplex& c) {
    json groups = json::array(), diffs = json::array();
    for (const auto& g : c.groups) groups.push_back(encode(g));
    for (const auto& d : c.differentials) diffs.push_back(encode(d.matrix()));
    return json{{"kind", "chain_complex"},
                {"dim_bound", c.dim_bound()},
                {"groups", groups},
                {"differentials", diffs}};
}

chain::ChainComplex decode_chain_complex(const json& j) {
    chain::ChainComplex c;
    for (const auto& g : j.at("groups")) c.groups.push_back(decode_group(g));
    if (c.groups.empty()) throw ParseError("chain complex: needs degree 0");
    const json& diffs = j.at("differentials");
    if (diffs.size() + 1 != c.groups.size())
        throw ParseError("chain complex: need one differential per positive degree");
    for (std::size_t n = 1; n < c.groups.size(); ++n)
        c.differentials.push_back(hom_between(c.groups[n], c.groups[n - 1], diffs[n - 1]));
    return c;
}

json encode(const chain::AugmentedChainComplex& c) {
    json out = encode(c.complex);
    out["kind"] = "augmented_chain_complex";
    out["augmentation"] = json{{"target", encode(c.target)}, {"matrix", encode(c.augmentation.matrix())}};
    return out;
}

chain::AugmentedChainComplex decode_augmented_chain_complex(const json& j) {
    chain::ChainComplex c = decode_chain_complex(j);
    FgAbGroup target = decode_group(j.at("augmentation").at("target"));
    Hom aug = hom_between(c.groups[0], target, j.at("augmentation").at("matrix"));
    return {std::move(c), std::move(target), std::move(aug)};
}

json encode(const cubical::CubicalObject& x) {
    json groups = json::array();
    for (const auto& g : x.groups) groups.push_back(encode(g));
    json faces = json::object(), degens = json::object(), conns = json::object();
    for (std::size_t n = 1; n <= x.dim_bound(); ++n) {
        json per = json::array();
        for (std::size_t i = 1; i <= n; ++i)
            per.push_back(json{{"0", encode(x.face(n, i, 0).matrix())},
                               {"1", encode(x.face(n, i, 1).matrix())}});
        faces[std::to_string(n)] = std::move(per);
        if (x.has_degeneracies()) {
            json sd = json::array();
            for (std::size_t i = 1; i <= n; ++i) sd.push_back(encode(x.degeneracy(n, i).matrix()));
            degens[std::to_string(n)] = std::move(sd);
        }
        if (x.has_connections() && n + 1 <= x.dim_bound()) {
            json cd = json::array();
            for (std::size_t i = 1; i <= n; ++i) cd.push_back(encode(x.connection(n, i).matrix()));
            conns[std::to_string(n)] = std::move(cd);
        }
    }
    json out{{"kind", "cubical_object"},
             {"level", cubical::level_name(x.level)},
             {"dim_bound", x.dim_bound()},
             {"groups", groups},
             {"faces", faces}};
    if (x.has_degeneracies()) out["degeneracies"] = degens;
    if (x.has_connections()) out["connections"] = conns;
    return out;
}

cubical::CubicalObject decode_cubical_object(const json& j) {
    cubical::CubicalObject x;
    x.level = cubical::level_from_name(j.at("level").get<std::string>());
    for (const auto& g : j.at("groups")) x.groups.push_back(decode_group(g));
    if (x.groups.empty()) throw ParseError("cubical object: needs degree 0");
    std::size_t D = x.dim_bound();
    x.face_maps.resize(D + 1);
    const json& faces = j.at("faces");
    for (std::size_t n = 1; n <= D; ++n) {
        const json& per = faces.at(std::to_string(n));
        if (per.size() != n) throw ParseError("cubical object: face count at degree " + std::to_string(n));
        for (std::size_t i = 1; i <= n; ++i)
            x.face_maps[n].push_back({hom_between(x.groups[n], x.groups[n - 1], per[i - 1].at("0")),
                                      hom_between(x.groups[n], x.groups[n - 1], per[i - 1].at("1"))});
    }
    if (j.contains("degeneracies")) {
        x.degeneracy_maps.resize(D + 1);
        for (std::size_t n = 1; n <= D; ++n) {
            const json& per = j.at("degeneracies").at(std::to_string(n));
            if (per.size() != n)
                throw ParseError("cubical object: degeneracy count at degree " + std::to_string(n));
            for (std::size_t i = 1; i <= n; ++i)
                x.degeneracy_maps[n].push_back(hom_between(x.groups[n - 1], x.groups[n], per[i - 1]));
        }
    }
    if (j.contains("connections") && D >= 2) {
        x.connection_maps.resize(D);
        for (std::size_t n = 1; n + 1 <= D; ++n) {
            const json& per = j.at("connections").at(std::to_string(n));
            if (per.size() != n)
                throw ParseError("cubical object: connection count at degree " + std::to_string(n));
            for (std::size_t i = 1; i <= n; ++i)
                x.connection_maps[n].push_back(hom_between(x.groups[n], x.groups[n + 1], per[i - 1]));
        }
    }
    return x;
}

json encode(const cubical::AugmentedCubicalObject& x) {
    json out = encode(x.object);
    out["kind"] = "augmented_cubical_object";
    out["augmentation"] = json{{"target", encode(x.target)}, {"matrix", encode(x.augmentation.matrix())}};
    return out;
}

cubical::AugmentedCubicalObject decode_augmented_cubical_object(const json& j) {
    cubical::CubicalObject obj = decode_cubical_object(j);
    FgAbGroup target = decode_group(j.at("augmentation").at("target"));
    Hom aug = hom_between(obj.groups[0], target, j.at("augmentation").at("matrix"));
    return {std::move(obj), std::move(target), std::move(aug)};
}

json encode(const simplicial::SimplicialObject& s) {
    json groups = json::array();
    for (const auto& g : s.groups) groups.push_back(encode(g));
    json faces = json::object(), degens = json::object();
    for (std::size_t n = 1; n <= s.dim_bound(); ++n) {
        json per = json::array();
        for (std::size_t i = 0; i <= n; ++i) per.push_back(encode(s.face(n, i).matrix()));
        faces[std::to_string(n)] = std::move(per);
    }
    if (s.has_degeneracies())
        for (std::size_t n = 0; n + 1 <= s.dim_bound(); ++n) {
            json per = json::array();
            for (std::size_t i = 0; i <= n; ++i) per.push_back(encode(s.degeneracy(n, i).matrix()));
            degens[std::to_string(n)] = std::move(per);
        }
    json out{{"kind", "simplicial_object"},
             {"level", simplicial::level_name(s.level)},
             {"dim_bound", s.dim_bound()},
             {"groups", groups},
             {"faces", faces}};
    if (s.has_degeneracies()) out["degeneracies"] = degens;
    return out;
}

simplicial::SimplicialObject decode_simplicial_object(const json& j) {
    simplicial::SimplicialObject s;
    s.level = simplicial::level_from_name(j.at("level").get<std::string>());
    for (const auto& g : j.at("groups")) s.groups.push_back(decode_group(g));
    if (s.groups.empty()) throw ParseError("simplicial object: needs degree 0");
    std::size_t D = s.dim_bound();
    s.face_maps.resize(D + 1);
    for (std::size_t n = 1; n <= D; ++n) {
        const json& per = j.at("faces").at(std::to_string(n));
        if (per.size() != n + 1)
            throw ParseError("simplicial object: face count at degree " + std::to_string(n));
        for (std::size_t i = 0; i <= n; ++i)
            s.face_maps[n].push_back(hom_between(s.groups[n], s.groups[n - 1], per[i]));
    }
    if (j.contains("degeneracies") && D >= 1) {
        s.degeneracy_maps.resize(D);
        for (std::size_t n = 0; n + 1 <= D; ++n) {
            const json& per = j.at("degeneracies").at(std::to_string(n));
            if (per.size() != n + 1)
                throw ParseError("simplicial object: degeneracy count at degree " + std::to_string(n));
            for (std::size_t i = 0; i <= n; ++i)
                s.degeneracy_maps[n].push_back(hom_between(s.groups[n], s.groups[n + 1], per[i]));
        }
    }
    return s;
}

json encode(const simplicial::AugmentedPseudoSimplicial& s) {
    json out = encode(s.object);
    out["kind"] = "augmented_pseudosimplicial";
    out["augmentation"] = json{{"target", encode(s.target)}, {"matrix", encode(s.augmentation.matrix())}};
    return out;
}

simplicial::AugmentedPseudoSimplicial decode_augmented_pseudosimplicial(const json& j) {
    simplicial::SimplicialObject obj = decode_simplicial_object(j);
    FgAbGroup target = decode_group(j.at("augmentation").at("target"));
    Hom aug = hom_between(obj.groups[0], target, j.at("augmentation").at("matrix"));
    return {std::move(obj), std::move(target), std::move(aug)};
}

json encode(const cubset::Poset& p) {
    json elems = json::array(), leq = json::array();
    for (const auto& e : p.elements) elems.push_back(e);
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (a != b && p.leq[a][b]) leq.push_back(json::array({p.elements[a], p.elements[b]}));
    return json{{"kind", "poset"}, {"elements", elems}, {"leq", leq}};
}

cubset::Poset decode_poset(const json& j) {
    std::vector<std::string> elements;
    for (const auto& e : j.at("elements")) elements.push_back(e.get<std::string>());
    auto index_of = [&](const json& v) -> std::size_t {
        if (v.is_number_unsigned()) return v.get<std::size_t>();
        auto it = std::find(elements.begin(), elements.end(), v.get<std::string>());
        if (it == elements.end()) throw ParseError("poset: unknown element " + v.dump());
        return static_cast<std::size_t>(it - elements.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& pr : j.value("leq", json::array())) {
        if (pr.size() != 2) throw ParseError("poset: leq entries are pairs");
        pairs.emplace_back(index_of(pr[0]), index_of(pr[1]));
    }
    return cubset::make_poset(std::move(elements), pairs);
}

namespace {

json encode_tables(const cubset::FiniteCubicalSet& x) {
    json faces = json::object(), degens = json::object(), conns = json::object();
    for (std::size_t n = 1; n <= x.dim_bound(); ++n) {
        json per = json::array();
        json sd = json::array();
        for (std::size_t i = 1; i <= n; ++i) {
            per.push_back(json{{"0", x.faces[n][i - 1][0]}, {"1", x.faces[n][i - 1][1]}});
            sd.push_back(x.degeneracies[n][i - 1]);
        }
        faces[std::to_string(n)] = std::move(per);
        degens[std::to_string(n)] = std::move(sd);
        if (x.has_connections() && n + 1 <= x.dim_bound()) {
            json cd = json::array();
            for (std::size_t i = 1; i <= n; ++i) cd.push_back(x.connections[n][i - 1]);
            conns[std::to_string(n)] = std::move(cd);
        }
    }
    json out{{"faces", faces}, {"degeneracies", degens}};
    if (x.has_connections()) out["connections"] = conns;
    return out;
}

void decode_tables(const json& j, cubset::FiniteCubicalSet& x) {
    std::size_t D = x.dim_bound();
    x.faces.resize(D + 1);
    x.degeneracies.resize(D + 1);
    if (j.contains("connections") && D >= 2) x.connections.resize(D);
    auto table = [&](const json& t, std::size_t expected) {
        std::vector<std::uint32_t> out;
        for (const auto& v : t) {
            std::uint32_t e = v.get<std::uint32_t>();
            if (e >= expected) throw ParseError("cube table entry out of range");
            out.push_back(e);
        }
        return out;
    };
    for (std::size_t n = 1; n <= D; ++n) {
        const json& per = j.at("faces").at(std::to_string(n));
        const json& sd = j.at("degeneracies").at(std::to_string(n));
        if (per.size() != n || sd.size() != n)
            throw ParseError("cube tables: wrong arity at degree " + std::to_string(n));
        x.faces[n].resize(n);
        x.degeneracies[n].resize(n);
        for (std::size_t i = 1; i <= n; ++i) {
            x.faces[n][i - 1][0] = table(per[i - 1].at("0"), x.count(n - 1));
            x.faces[n][i - 1][1] = table(per[i - 1].at("1"), x.count(n - 1));
            if (x.faces[n][i - 1][0].size() != x.count(n) ||
                x.faces[n][i - 1][1].size() != x.count(n))
                throw ParseError("face table length mismatch at degree " + std::to_string(n));
            x.degeneracies[n][i - 1] = table(sd[i - 1], x.count(n));
            if (x.degeneracies[n][i - 1].size() != x.count(n - 1))
                throw ParseError("degeneracy table length mismatch at degree " + std::to_string(n));
        }
        if (x.connections.size() > n && n + 1 <= D) {
            const json& cd = j.at("connections").at(std::to_string(n));
            if (cd.size() != n) throw ParseError("connection tables: wrong arity");
            x.connections[n].resize(n);
            for (std::size_t i = 1; i <= n; ++i) {
                x.connections[n][i - 1] = table(cd[i - 1], x.count(n + 1));
                if (x.connections[n][i - 1].size() != x.count(n))
                    throw ParseError("connection table length mismatch");
            }
        }
    }
}

}  // namespace

json encode(const cubset::FiniteCubicalSet& x) {
    json cubes = json::array();
    for (const auto& names : x.cube_names) cubes.push_back(names);
    json out = encode_tables(x);
    out["kind"] = "finite_cubical_set";
    out["dim_bound"] = x.dim_bound();
    out["cubes"] = cubes;
    if (x.basepoint) out["basepoint"] = x.cube_names[0][*x.basepoint];
    return out;
}

cubset::FiniteCubicalSet decode_finite_cubical_set(const json& j) {
    cubset::FiniteCubicalSet x;
    for (const auto& names : j.at("cubes")) {
        x.cube_names.emplace_back();
        for (const auto& n : names) x.cube_names.back().push_back(n.get<std::string>());
    }
    if (x.cube_names.empty()) throw ParseError("finite cubical set: needs degree 0");
    decode_tables(j, x);
    if (j.contains("basepoint")) {
        const json& b = j.at("basepoint");
        if (b.is_number_unsigned()) {
            std::uint32_t idx = b.get<std::uint32_t>();
            if (idx >= x.count(0)) throw ParseError("basepoint out of range");
            x.basepoint = idx;
        } else {
            auto it = std::find(x.cube_names[0].begin(), x.cube_names[0].end(), b.get<std::string>());
            if (it == x.cube_names[0].end()) throw ParseError("unknown basepoint name");
            x.basepoint = static_cast<std::uint32_t>(it - x.cube_names[0].begin());
        }
    }
    return x;
}

json encode(const homotopy::FiniteCubicalGroup& g) {
    json out = encode(g.set);
    out["kind"] = "finite_cubical_group";
    json mult = json::array();
    for (std::size_t n = 0; n <= g.dim_bound(); ++n) {
        json table = json::array();
        for (std::uint32_t a = 0; a < g.groups[n].size; ++a) {
            json row = json::array();
            for (std::uint32_t b = 0; b < g.groups[n].size; ++b) row.push_back(g.groups[n].mult(a, b));
            table.push_back(std::move(row));
        }
        mult.push_back(std::move(table));
    }
    out["mult"] = mult;
    return out;
}

homotopy::FiniteCubicalGroup decode_finite_cubical_group(const json& j) {
    cubset::FiniteCubicalSet set = decode_finite_cubical_set(j);
    std::vector<std::vector<std::vector<std::uint32_t>>> tables;
    for (const auto& t : j.at("mult")) {
        tables.emplace_back();
        for (const auto& row : t) tables.back().push_back(row.get<std::vector<std::uint32_t>>());
    }
    return homotopy::group_from_tables(std::move(set), std::move(tables));
}

json encode(const derive::Resolution& r) {
    json kernels = json::array();
    for (const auto& k : r.kernels) {
        json projections = json::array();
        for (const auto& pr : k.projections)
            projections.push_back(
                json{{"0", encode(pr[0].matrix())}, {"1", encode(pr[1].matrix())}});
        kernels.push_back(json{{"group", encode(k.group)}, {"projections", projections}});
    }
    json covers = json::array();
    for (const auto& e : r.covers) covers.push_back(encode(e.matrix()));
    return json{{"kind", "resolution"},
                {"target", encode(r.target)},
                {"object", encode(r.object)},
                {"kernels", kernels},
                {"covers", covers}};
}

json encode(const Report& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"where", v.where}, {"identity", v.identity}, {"detail", v.detail}});
    return json{{"kind", "report"},
                {"subject", r.subject},
                {"passed", r.passed()},
                {"violations", violations},
                {"notes", r.notes}};
}

json encode(const homotopy::HomotopyGroupResult& r) {
    json out{{"kind", "homotopy_group"},
             {"degree", r.degree},
             {"certified", r.certified},
             {"classes", r.class_count},
             {"ztilde", r.ztilde},
             {"class_of", r.class_of},
             {"basepoint_class", r.basepoint_class}};
    if (r.product) out["product"] = *r.product;
    if (r.abelian_form) out["canonical"] = r.abelian_form->canonical_name();
    return out;
}

derive::AdditiveFunctor parse_functor(const std::string& text) {
    if (text == "identity" || text == "id") return derive::AdditiveFunctor::identity();
    if (text.rfind("tensor:", 0) == 0)
        return derive::AdditiveFunctor::tensor_with(parse_group(text.substr(7)));
    if (text.rfind("hom:", 0) == 0)
        return derive::AdditiveFunctor::hom_from(parse_group(text.substr(4)));
    throw ParseError("functor: expected identity, tensor:<group> or hom:<group>");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());  // nlohmann messages carry the byte position
    }
}

Report verify_any(const json& j, const std::string& kind_override) {
    std::string kind = kind_override;
    if (kind.empty()) {
        if (!j.is_object() || !j.contains("kind"))
            throw ParseError("verify: object needs a \"kind\" field (or pass --type)");
        kind = j.at("kind").get<std::string>();
    }
    if (kind == "group") {
        FgAbGroup g = decode_group(j);
        Report r{"group"};
        r.note("canonical form: " + g.canonical_name());
        return r;
    }
    if (kind == "hom") {
        Hom h = decode_hom(j);
        Report r{"hom"};
        if (!h.is_well_defined()) r.fail("matrix", "maps relations into relations");
        return r;
    }
    if (kind == "chain_complex") return chain::validate_complex(decode_chain_complex(j));
    if (kind == "augmented_chain_complex")
        return chain::validate_complex(decode_augmented_chain_complex(j));
    if (kind == "cubical_object") {
        cubical::CubicalObject x = decode_cubical_object(j);
        return cubical::validate_cubical(x, x.level);
    }
    if (kind == "augmented_cubical_object") {
        cubical::AugmentedCubicalObject x = decode_augmented_cubical_object(j);
        return cubical::validate_cubical(x, x.object.level);
    }
    if (kind == "simplicial_object") {
        simplicial::SimplicialObject s = decode_simplicial_object(j);
        return simplicial::validate_simplicial(s, s.level);
    }
    if (kind == "augmented_pseudosimplicial") {
        simplicial::AugmentedPseudoSimplicial s = decode_augmented_pseudosimplicial(j);
        return simplicial::validate_simplicial(s, s.object.level);
    }
    if (kind == "poset") {
        cubset::Poset p = decode_poset(j);
        Report r{"poset"};
        r.note("elements: " + std::to_string(p.size()));
        return r;
    }
    if (kind == "finite_cubical_set")
        return cubset::validate_cubical_set(decode_finite_cubical_set(j));
    if (kind == "finite_cubical_group")
        return homotopy::validate_cubical_group(decode_finite_cubical_group(j));
    if (kind == "resolution") {
        cubical::AugmentedCubicalObject x = decode_augmented_cubical_object(j.at("object"));
        Report r = cubical::validate_cubical(x, x.object.level);
        r.subject = "resolution";
        return r;
    }
    throw ParseError("verify: unknown kind \"" + kind + "\"");
}

}  // namespace mbx::io
