#include "moorebox.h"

#include <cstring>
#include <string>

#include "core/chain.hpp"
#include "core/derive.hpp"
#include "core/error.hpp"
#include "core/homotopy.hpp"
#include "core/jsonio.hpp"
#include "core/norm.hpp"
#include "core/suite.hpp"

using mbx::io::json;

struct mbx_group {
    mbx::exactalg::FgAbGroup value;
};

struct mbx_object {
    json value;
    std::string kind;
};

struct mbx_report {
    json value;
    bool passed;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
mbx_status wrap(Fn&& fn) {
    try {
        fn();
        return MBX_OK;
    } catch (const mbx::ParseError& e) {
        g_last_error = e.what();
        return MBX_ERROR_PARSE;
    } catch (const mbx::ShapeError& e) {
        g_last_error = e.what();
        return MBX_ERROR_PARSE;
    } catch (const mbx::StructureError& e) {
        g_last_error = e.what();
        return MBX_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MBX_ERROR_INTERNAL;
    }
}

mbx_report* make_report(json j, bool passed) { return new mbx_report{std::move(j), passed}; }

mbx_report* from_core_report(const mbx::Report& r) {
    return make_report(mbx::io::encode(r), r.passed());
}

json group_entry(const mbx::exactalg::FgAbGroup& g) {
    return json{{"canonical", g.canonical_name()}, {"group", mbx::io::encode(g)}};
}

const char* require(const void* p, const char* what) {
    if (!p) throw mbx::ParseError(std::string("null ") + what);
    return nullptr;
}

}  // namespace

extern "C" {

const char* mbx_version(void) { return "1.0.0"; }

const char* mbx_last_error(void) { return g_last_error.c_str(); }

void mbx_string_free(char* s) { std::free(s); }

mbx_status mbx_group_parse(const char* text, mbx_group** out) {
    return wrap([&] {
        require(text, "text");
        require(out, "out");
        *out = new mbx_group{mbx::io::parse_group(text)};
    });
}

mbx_status mbx_group_to_json(const mbx_group* g, char** out_json) {
    return wrap([&] {
        require(g, "group");
        require(out_json, "out");
        *out_json = dup_string(mbx::io::encode(g->value).dump());
    });
}

mbx_status mbx_group_canonical_name(const mbx_group* g, char** out) {
    return wrap([&] {
        require(g, "group");
        require(out, "out");
        *out = dup_string(g->value.canonical_name());
    });
}

void mbx_group_free(mbx_group* g) { delete g; }

mbx_status mbx_object_parse(const char* json_text, const char* kind, mbx_object** out) {
    return wrap([&] {
        require(json_text, "json");
        require(out, "out");
        json j = mbx::io::parse_json(json_text);
        std::string k = kind ? kind : "";
        if (k.empty()) {
            if (!j.is_object() || !j.contains("kind"))
                throw mbx::ParseError("object needs a \"kind\" field or an explicit kind");
            k = j.at("kind").get<std::string>();
        }
        *out = new mbx_object{std::move(j), std::move(k)};
    });
}

mbx_status mbx_object_to_json(const mbx_object* o, char** out_json) {
    return wrap([&] {
        require(o, "object");
        require(out_json, "out");
        *out_json = dup_string(o->value.dump());
    });
}

void mbx_object_free(mbx_object* o) { delete o; }

int mbx_report_passed(const mbx_report* r) { return r && r->passed ? 1 : 0; }

mbx_status mbx_report_to_json(const mbx_report* r, char** out_json) {
    return wrap([&] {
        require(r, "report");
        require(out_json, "out");
        *out_json = dup_string(r->value.dump());
    });
}

void mbx_report_free(mbx_report* r) { delete r; }

mbx_status mbx_verify(const mbx_object* o, mbx_report** out) {
    return wrap([&] {
        require(o, "object");
        require(out, "out");
        *out = from_core_report(mbx::io::verify_any(o->value, o->kind));
    });
}

mbx_status mbx_homology(const mbx_object* cubical_object, const char* variant, mbx_report** out) {
    return wrap([&] {
        require(cubical_object, "object");
        require(variant, "variant");
        require(out, "out");
        mbx::cubical::CubicalObject x = mbx::io::decode_cubical_object(cubical_object->value);
        mbx::norm::Variant v = mbx::norm::variant_from_name(variant);
        mbx::norm::NormalizationResult nr = mbx::norm::normalize(x, v);
        json degrees = json::array();
        for (std::size_t n = 0; n <= x.dim_bound(); ++n) {
            auto h = mbx::chain::homology(nr.complex, n);
            json e = group_entry(h.group);
            e["degree"] = n;
            e["certified"] = h.certified;
            degrees.push_back(std::move(e));
        }
        *out = make_report(json{{"kind", "homology_report"},
                                {"variant", variant},
                                {"passed", true},
                                {"degrees", degrees},
                                {"complex", mbx::io::encode(nr.complex)}},
                           true);
    });
}

mbx_status mbx_resolve(const mbx_group* a, int dim_bound, mbx_report** out) {
    return wrap([&] {
        require(a, "group");
        require(out, "out");
        if (dim_bound < 0) throw mbx::ParseError("dim_bound must be nonnegative");
        mbx::derive::Resolution res =
            mbx::derive::build_resolution(a->value, static_cast<std::size_t>(dim_bound));
        mbx::derive::synth_degeneracies(res);
        mbx::derive::synth_connections(res);
        mbx::Report vr = mbx::derive::validate_resolution(res);
        mbx::Report vc =
            mbx::cubical::validate_cubical(res.object.object, mbx::cubical::Level::pcpc);
        bool ok = vr.passed() && vc.passed();
        *out = make_report(json{{"kind", "resolve_report"},
                                {"passed", ok},
                                {"validation", mbx::io::encode(vr)},
                                {"pcpc_validation", mbx::io::encode(vc)},
                                {"resolution", mbx::io::encode(res)}},
                           ok);
    });
}

mbx_status mbx_derive(const mbx_group* a, const char* functor, const char* variant, int dim_bound,
                      mbx_report** out) {
    return wrap([&] {
        require(a, "group");
        require(functor, "functor");
        require(variant, "variant");
        require(out, "out");
        if (dim_bound < 1) throw mbx::ParseError("dim_bound must be at least 1");
        mbx::derive::AdditiveFunctor t = mbx::io::parse_functor(functor);
        mbx::norm::Variant v = mbx::norm::variant_from_name(variant);
        auto groups = mbx::derive::derived_functors(t, a->value, static_cast<std::size_t>(dim_bound), v);
        json degrees = json::array();
        for (std::size_t n = 0; n < groups.size(); ++n) {
            json e = group_entry(groups[n]);
            e["degree"] = n;
            degrees.push_back(std::move(e));
        }
        *out = make_report(json{{"kind", "derive_report"},
                                {"functor", t.name()},
                                {"variant", variant},
                                {"passed", true},
                                {"degrees", degrees}},
                           true);
    });
}

mbx_status mbx_tor(const mbx_group* a, const mbx_group* b, int degree, mbx_group** out) {
    return wrap([&] {
        require(a, "group");
        require(b, "group");
        require(out, "out");
        if (degree < 0) throw mbx::ParseError("degree must be nonnegative");
        *out = new mbx_group{
            mbx::derive::tor_oracle(a->value, b->value, static_cast<std::size_t>(degree))};
    });
}

mbx_status mbx_compare_classical(const mbx_group* a, const mbx_group* b, int dim_bound,
                                 mbx_report** out) {
    return wrap([&] {
        require(a, "group");
        require(b, "group");
        require(out, "out");
        if (dim_bound < 1) throw mbx::ParseError("dim_bound must be at least 1");
        mbx::Report r = mbx::derive::compare_with_classical(b->value, a->value,
                                                            static_cast<std::size_t>(dim_bound));
        *out = from_core_report(r);
    });
}

namespace {

// accepts a finite cubical set or group and returns the underlying set,
// with the group when present
std::pair<mbx::cubset::FiniteCubicalSet, std::optional<mbx::homotopy::FiniteCubicalGroup>>
decode_set_or_group(const mbx_object* o) {
    if (o->kind == "finite_cubical_group") {
        mbx::homotopy::FiniteCubicalGroup g = mbx::io::decode_finite_cubical_group(o->value);
        return {g.set, std::move(g)};
    }
    if (o->kind == "finite_cubical_set")
        return {mbx::io::decode_finite_cubical_set(o->value), std::nullopt};
    throw mbx::ParseError("expected a finite cubical set or group, got kind " + o->kind);
}

}  // namespace

mbx_status mbx_kan_check(const mbx_object* set_or_group, int up_to, mbx_report** out) {
    return wrap([&] {
        require(set_or_group, "object");
        require(out, "out");
        if (up_to < 0) throw mbx::ParseError("up_to must be nonnegative");
        auto [set, group] = decode_set_or_group(set_or_group);
        mbx::Report r = mbx::homotopy::kan_check(set, static_cast<std::size_t>(up_to));
        *out = from_core_report(r);
    });
}

mbx_status mbx_homotopy_group(const mbx_object* set_or_group, int degree, mbx_report** out) {
    return wrap([&] {
        require(set_or_group, "object");
        require(out, "out");
        if (degree < 0) throw mbx::ParseError("degree must be nonnegative");
        auto [set, group] = decode_set_or_group(set_or_group);
        mbx::homotopy::HomotopyGroupResult r =
            group ? mbx::homotopy::pi(*group, static_cast<std::size_t>(degree))
                  : mbx::homotopy::pi(set, static_cast<std::size_t>(degree));
        json j = mbx::io::encode(r);
        j["passed"] = true;
        *out = make_report(std::move(j), true);
    });
}

mbx_status mbx_poset_cubical_set(const char* poset_json, int dim_bound, mbx_object** out) {
    return wrap([&] {
        require(poset_json, "poset");
        require(out, "out");
        if (dim_bound < 0) throw mbx::ParseError("dim_bound must be nonnegative");
        mbx::cubset::Poset p = mbx::io::decode_poset(mbx::io::parse_json(poset_json));
        mbx::cubset::FiniteCubicalSet x =
            mbx::cubset::poset_cubical_set(p, static_cast<std::size_t>(dim_bound));
        *out = new mbx_object{mbx::io::encode(x), "finite_cubical_set"};
    });
}

mbx_status mbx_linearize(const mbx_object* set, const mbx_group* coeff, mbx_object** out) {
    return wrap([&] {
        require(set, "set");
        require(coeff, "coeff");
        require(out, "out");
        auto [s, group] = decode_set_or_group(set);
        mbx::cubical::CubicalObject x = mbx::cubset::linearize(s, coeff->value);
        *out = new mbx_object{mbx::io::encode(x), "cubical_object"};
    });
}

mbx_status mbx_linearize_group(const mbx_object* set, const mbx_group* coeff, mbx_object** out) {
    return wrap([&] {
        require(set, "set");
        require(coeff, "coeff");
        require(out, "out");
        auto [s, group] = decode_set_or_group(set);
        mbx::homotopy::FiniteCubicalGroup g = mbx::homotopy::linearize_group(s, coeff->value);
        *out = new mbx_object{mbx::io::encode(g), "finite_cubical_group"};
    });
}

mbx_status mbx_suite(uint64_t seed, mbx_report** out) {
    return wrap([&] {
        require(out, "out");
        mbx::suite::SuiteResult r = mbx::suite::run_acceptance(seed);
        *out = make_report(mbx::suite::to_json(r), r.passed());
    });
}

}  // extern "C"
