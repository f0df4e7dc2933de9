#include "core/cubical.hpp"

#include "core/error.hpp"

namespace mbx::cubical {

std::string level_name(Level l) {
    switch (l) {
        case Level::precubical: return "precubical";
        case Level::pseudocubical: return "pseudocubical";
        case Level::pcpc: return "pcpc";
        case Level::cubical: return "cubical";
        case Level::cc: return "cc";
    }
    return "?";
}

Level level_from_name(const std::string& s) {
    if (s == "precubical") return Level::precubical;
    if (s == "pseudocubical") return Level::pseudocubical;
    if (s == "pcpc") return Level::pcpc;
    if (s == "cubical") return Level::cubical;
    if (s == "cc") return Level::cc;
    throw ParseError("unknown cubical level: " + s);
}

bool level_has_degeneracies(Level l) { return l != Level::precubical; }
bool level_has_connections(Level l) { return l == Level::pcpc || l == Level::cc; }

namespace {

std::string pos(std::size_t n, std::size_t i, std::size_t j, int a, int e) {
    return "degree " + std::to_string(n) + ", i=" + std::to_string(i) + " j=" + std::to_string(j) +
           " (" + std::to_string(a) + "," + std::to_string(e) + ")";
}

// Shape pass: every stored map has the right endpoints and is well-defined.
// Returns false if shapes are too broken for identity checks.
bool check_shapes(const CubicalObject& x, Report& r) {
    std::size_t D = x.dim_bound();
    bool usable = true;
    if (x.face_maps.size() != D + 1 && !(D == 0 && x.face_maps.size() <= 1)) {
        r.fail("faces", "shape", "expected face maps for degrees 1.." + std::to_string(D));
        usable = false;
    }
    for (std::size_t n = 1; n <= D && n < x.face_maps.size(); ++n) {
        if (x.face_maps[n].size() != n) {
            r.fail("degree " + std::to_string(n), "shape", "expected " + std::to_string(n) + " face pairs");
            usable = false;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i)
            for (int a = 0; a < 2; ++a) {
                const Hom& f = x.face(n, i, a);
                if (!f.source().same_presentation(x.groups[n]) ||
                    !f.target().same_presentation(x.groups[n - 1])) {
                    r.fail(pos(n, i, 0, a, 0), "face endpoints", "");
                    usable = false;
                } else if (!f.is_well_defined()) {
                    r.fail(pos(n, i, 0, a, 0), "face well-defined", "");
                }
            }
    }
    if (x.has_degeneracies())
        for (std::size_t n = 1; n <= D && n < x.degeneracy_maps.size(); ++n) {
            if (x.degeneracy_maps[n].size() != n) {
                r.fail("degree " + std::to_string(n), "shape",
                       "expected " + std::to_string(n) + " degeneracies into this degree");
                usable = false;
                continue;
            }
            for (std::size_t i = 1; i <= n; ++i) {
                const Hom& s = x.degeneracy(n, i);
                if (!s.source().same_presentation(x.groups[n - 1]) ||
                    !s.target().same_presentation(x.groups[n])) {
                    r.fail("degree " + std::to_string(n) + ", s_" + std::to_string(i),
                           "degeneracy endpoints", "");
                    usable = false;
                } else if (!s.is_well_defined()) {
                    r.fail("degree " + std::to_string(n) + ", s_" + std::to_string(i),
                           "degeneracy well-defined", "");
                }
            }
        }
    if (x.has_connections())
        for (std::size_t n = 1; n + 1 <= D && n < x.connection_maps.size(); ++n) {
            if (x.connection_maps[n].size() != n) {
                r.fail("degree " + std::to_string(n), "shape",
                       "expected " + std::to_string(n) + " connections out of this degree");
                usable = false;
                continue;
            }
            for (std::size_t i = 1; i <= n; ++i) {
                const Hom& g = x.connection(n, i);
                if (!g.source().same_presentation(x.groups[n]) ||
                    !g.target().same_presentation(x.groups[n + 1])) {
                    r.fail("degree " + std::to_string(n) + ", Γ_" + std::to_string(i),
                           "connection endpoints", "");
                    usable = false;
                } else if (!g.is_well_defined()) {
                    r.fail("degree " + std::to_string(n) + ", Γ_" + std::to_string(i),
                           "connection well-defined", "");
                }
            }
        }
    return usable;
}

void check_face_face(const CubicalObject& x, Report& r) {
    for (std::size_t n = 2; n <= x.dim_bound(); ++n)
        for (std::size_t j = 2; j <= n; ++j)
            for (std::size_t i = 1; i < j; ++i)
                for (int a = 0; a < 2; ++a)
                    for (int e = 0; e < 2; ++e) {
                        Hom lhs = x.face(n - 1, i, a).compose(x.face(n, j, e));
                        Hom rhs = x.face(n - 1, j - 1, e).compose(x.face(n, i, a));
                        if (!lhs.equal_mod_target(rhs))
                            r.fail(pos(n, i, j, a, e), "∂∂ exchange");
                    }
}

void check_face_degeneracy(const CubicalObject& x, Report& r) {
    // ∂_i^a s_j on X_{n-1}, both indices in 1..n
    for (std::size_t n = 1; n <= x.dim_bound(); ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n; ++i)
                for (int a = 0; a < 2; ++a) {
                    Hom lhs = x.face(n, i, a).compose(x.degeneracy(n, j));
                    Hom rhs = Hom::identity(x.groups[n - 1]);
                    if (i < j)
                        rhs = x.degeneracy(n - 1, j - 1).compose(x.face(n - 1, i, a));
                    else if (i > j)
                        rhs = x.degeneracy(n - 1, j).compose(x.face(n - 1, i - 1, a));
                    if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, j, a, 0), "∂s case split");
                }
}

void check_degeneracy_degeneracy(const CubicalObject& x, Report& r) {
    // s_i s_j = s_{j+1} s_i for i <= j, target degree n+1 <= D
    for (std::size_t m = 2; m <= x.dim_bound(); ++m) {
        std::size_t n = m - 1;
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= j; ++i) {
                Hom lhs = x.degeneracy(m, i).compose(x.degeneracy(n, j));
                Hom rhs = x.degeneracy(m, j + 1).compose(x.degeneracy(n, i));
                if (!lhs.equal_mod_target(rhs)) r.fail(pos(m, i, j, 0, 0), "ss exchange");
            }
    }
}

void check_face_connection(const CubicalObject& x, Report& r) {
    // ∂_i^a Γ_j on X_n with Γ_j : X_n -> X_{n+1}, n+1 <= D
    for (std::size_t n = 1; n + 1 <= x.dim_bound(); ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n + 1; ++i)
                for (int a = 0; a < 2; ++a) {
                    Hom lhs = x.face(n + 1, i, a).compose(x.connection(n, j));
                    Hom rhs = Hom::identity(x.groups[n]);
                    if (i < j)
                        rhs = x.connection(n - 1, j - 1).compose(x.face(n, i, a));
                    else if (i == j || i == j + 1)
                        rhs = (a == 0) ? Hom::identity(x.groups[n])
                                       : x.degeneracy(n, j).compose(x.face(n, j, 1));
                    else
                        rhs = x.connection(n - 1, j).compose(x.face(n, i - 1, a));
                    if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, j, a, 0), "∂Γ case split");
                }
}

void check_connection_connection(const CubicalObject& x, Report& r) {
    // Γ_i Γ_j = Γ_{j+1} Γ_i for i <= j, landing in degree n+2 <= D
    for (std::size_t n = 1; n + 2 <= x.dim_bound(); ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= j; ++i) {
                Hom lhs = x.connection(n + 1, i).compose(x.connection(n, j));
                Hom rhs = x.connection(n + 1, j + 1).compose(x.connection(n, i));
                if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, j, 0, 0), "ΓΓ exchange");
            }
}

void check_connection_degeneracy(const CubicalObject& x, Report& r) {
    // Γ_i s_j with s_j : X_{n-1} -> X_n, Γ_i : X_n -> X_{n+1}, n+1 <= D
    for (std::size_t n = 1; n + 1 <= x.dim_bound(); ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n; ++i) {
                Hom lhs = x.connection(n, i).compose(x.degeneracy(n, j));
                Hom rhs = Hom::identity(x.groups[n + 1]);
                if (i < j)
                    rhs = x.degeneracy(n + 1, j + 1).compose(x.connection(n - 1, i));
                else if (i == j)
                    rhs = x.degeneracy(n + 1, i).compose(x.degeneracy(n, i));
                else
                    rhs = x.degeneracy(n + 1, j).compose(x.connection(n - 1, i - 1));
                if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, j, 0, 0), "Γs case split");
            }
}

}  // namespace

Report validate_cubical(const CubicalObject& x, Level level) {
    Report r{"cubical object (" + level_name(level) + ")"};
    if (x.groups.empty()) {
        r.fail("shape", "degree 0 required");
        return r;
    }
    if (level_has_degeneracies(level) && !x.has_degeneracies() && x.dim_bound() >= 1) {
        r.fail("structure", "degeneracies required for level " + level_name(level));
        return r;
    }
    if (level_has_connections(level) && !x.has_connections() && x.dim_bound() >= 2) {
        r.fail("structure", "connections required for level " + level_name(level));
        return r;
    }
    if (!check_shapes(x, r)) return r;

    check_face_face(x, r);
    if (level_has_degeneracies(level)) check_face_degeneracy(x, r);
    if (level == Level::cubical || level == Level::cc) check_degeneracy_degeneracy(x, r);
    if (level_has_connections(level) && x.dim_bound() >= 2) check_face_connection(x, r);
    if (level == Level::cc && x.dim_bound() >= 2) {
        check_connection_connection(x, r);
        check_connection_degeneracy(x, r);
    }
    return r;
}

Report validate_cubical(const AugmentedCubicalObject& x, Level level) {
    Report r = validate_cubical(x.object, level);
    r.subject = "augmented " + r.subject;
    if (!x.augmentation.is_well_defined()) r.fail("augmentation", "well-defined");
    if (x.object.dim_bound() >= 1) {
        Hom lhs = x.augmentation.compose(x.object.face(1, 1, 0));
        Hom rhs = x.augmentation.compose(x.object.face(1, 1, 1));
        if (!lhs.equal_mod_target(rhs)) r.fail("degree 1", "∂∂_1^0 = ∂∂_1^1");
    }
    return r;
}

Report validate_cubical_morphism(const CubicalMorphism& f, Level level) {
    Report r{"cubical morphism"};
    std::size_t D = f.source.dim_bound();
    if (f.target.dim_bound() != D || f.components.size() != D + 1)
        throw ShapeError("cubical morphism: dim bounds / component count disagree");
    for (std::size_t n = 0; n <= D; ++n)
        if (!f.components[n].is_well_defined())
            r.fail("degree " + std::to_string(n), "component well-defined");
    for (std::size_t n = 1; n <= D; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (int a = 0; a < 2; ++a) {
                Hom lhs = f.components[n - 1].compose(f.source.face(n, i, a));
                Hom rhs = f.target.face(n, i, a).compose(f.components[n]);
                if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, 0, a, 0), "commutes with faces");
            }
    if (level_has_degeneracies(level))
        for (std::size_t n = 1; n <= D; ++n)
            for (std::size_t i = 1; i <= n; ++i) {
                Hom lhs = f.components[n].compose(f.source.degeneracy(n, i));
                Hom rhs = f.target.degeneracy(n, i).compose(f.components[n - 1]);
                if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, 0, 0, 0), "commutes with degeneracies");
            }
    if (level_has_connections(level))
        for (std::size_t n = 1; n + 1 <= D; ++n)
            for (std::size_t i = 1; i <= n; ++i) {
                Hom lhs = f.components[n + 1].compose(f.source.connection(n, i));
                Hom rhs = f.target.connection(n, i).compose(f.components[n]);
                if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, 0, 0, 0), "commutes with connections");
            }
    return r;
}

Report validate_precubical_homotopy(const PrecubicalHomotopy& h) {
    Report r{"precubical homotopy"};
    std::size_t D = h.from.source.dim_bound();
    if (h.components.size() != D)
        throw ShapeError("precubical homotopy: needs components h_0..h_{D-1}");
    const CubicalObject& tgt = h.from.target;
    for (std::size_t n = 0; n + 1 <= D; ++n) {
        if (!h.components[n].is_well_defined())
            r.fail("degree " + std::to_string(n), "component well-defined");
        Hom d0h = tgt.face(n + 1, 1, 0).compose(h.components[n]);
        Hom d1h = tgt.face(n + 1, 1, 1).compose(h.components[n]);
        if (!d0h.equal_mod_target(h.from.components[n]))
            r.fail("degree " + std::to_string(n), "∂_1^0 h = f");
        if (!d1h.equal_mod_target(h.to.components[n]))
            r.fail("degree " + std::to_string(n), "∂_1^1 h = g");
        if (n >= 1)
            for (std::size_t i = 2; i <= n + 1; ++i)
                for (int e = 0; e < 2; ++e) {
                    Hom lhs = tgt.face(n + 1, i, e).compose(h.components[n]);
                    Hom rhs = h.components[n - 1].compose(h.from.source.face(n, i - 1, e));
                    if (!lhs.equal_mod_target(rhs)) r.fail(pos(n, i, 0, e, 0), "∂_i^e h = h ∂_{i-1}^e");
                }
    }
    return r;
}

NTower n_tower(const CubicalObject& x) {
    NTower t;
    t.sub.push_back({x.groups[0], Hom::identity(x.groups[0])});
    t.faces0.emplace_back();
    for (std::size_t n = 1; n <= x.dim_bound(); ++n) {
        std::vector<Hom> ones;
        for (std::size_t i = 1; i <= n; ++i) ones.push_back(x.face(n, i, 1));
        t.sub.push_back(exactalg::intersect_kernels(x.groups[n], ones));
        std::vector<Hom> restricted;
        for (std::size_t i = 1; i <= n; ++i)
            restricted.push_back(exactalg::factor_through(
                t.sub[n - 1].inclusion, x.face(n, i, 0).compose(t.sub[n].inclusion)));
        t.faces0.push_back(std::move(restricted));
    }
    return t;
}

CubicalObject constant_cubical(const FgAbGroup& a, std::size_t dim_bound) {
    CubicalObject x;
    x.level = Level::cc;
    Hom id = Hom::identity(a);
    x.groups.assign(dim_bound + 1, a);
    x.face_maps.resize(dim_bound + 1);
    x.degeneracy_maps.resize(dim_bound + 1);
    if (dim_bound >= 2) x.connection_maps.resize(dim_bound);
    for (std::size_t n = 1; n <= dim_bound; ++n) {
        x.face_maps[n].assign(n, {id, id});
        x.degeneracy_maps[n].assign(n, id);
        if (n + 1 <= dim_bound) x.connection_maps[n].assign(n, id);
    }
    return x;
}

}  // namespace mbx::cubical
