#include "core/suite.hpp"

#include <random>

#include "core/chain.hpp"
#include "core/derive.hpp"
#include "core/error.hpp"
#include "core/homotopy.hpp"
#include "core/jsonio.hpp"
#include "core/norm.hpp"

namespace mbx::suite {

using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::Int;

namespace {

FgAbGroup z_over(long long d) { return FgAbGroup::cyclic(d); }

std::vector<Int> factors(const FgAbGroup& g) { return g.invariant_factors(); }

bool is_form(const FgAbGroup& g, std::size_t free_rank, std::vector<long long> torsion) {
    std::vector<Int> expect(torsion.begin(), torsion.end());
    return g.free_rank() == free_rank && factors(g) == expect;
}

std::string names(const std::vector<FgAbGroup>& gs) {
    std::string out;
    for (std::size_t i = 0; i < gs.size(); ++i) out += (i ? ", " : "") + gs[i].canonical_name();
    return out;
}

FgAbGroup random_small_group(std::mt19937_64& rng) {
    std::size_t free_rank = rng() % 3;
    std::size_t torsion_count = rng() % 3;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < torsion_count; ++i) torsion.push_back(Int(2 + rng() % 11));
    return FgAbGroup::from_invariants(free_rank, torsion);
}

void criterion_tor(CriterionResult& c, std::uint64_t seed) {
    c.title = "Tor coincidence (Thm 4.4)";
    c.passed = true;
    Report rep = derive::compare_with_classical(z_over(6), z_over(4), 3);
    if (!rep.passed()) {
        c.passed = false;
        for (const auto& v : rep.violations) c.details.push_back(v.where + ": " + v.identity);
    }
    auto dn = derive::derived_functors(derive::AdditiveFunctor::tensor_with(z_over(6)), z_over(4), 3,
                                       norm::Variant::N);
    if (!(is_form(dn[0], 0, {2}) && is_form(dn[1], 0, {2}) && is_form(dn[2], 0, {}))) {
        c.passed = false;
        c.details.push_back("(Z/4, Z/6) expected Z/2, Z/2, 0; got " + names(dn));
    } else {
        c.details.push_back("(Z/4, Z/6) degrees 0..2: " + names(dn));
    }
    std::mt19937_64 rng(seed);
    std::size_t matches = 0;
    for (int k = 0; k < 20; ++k) {
        FgAbGroup a = random_small_group(rng), b = random_small_group(rng);
        Report r = derive::compare_with_classical(b, a, 3);
        if (r.passed())
            ++matches;
        else {
            c.passed = false;
            c.details.push_back("pair " + std::to_string(k) + " (" + a.canonical_name() + ", " +
                                b.canonical_name() + ") disagrees");
        }
    }
    c.details.push_back("random pairs matched: " + std::to_string(matches) + "/20 (seed " +
                        std::to_string(seed) + ")");
}

std::vector<std::pair<std::string, FgAbGroup>> resolution_targets() {
    exactalg::IntMatrix rel23(2, 2);
    rel23.at(0, 0) = 2;
    rel23.at(1, 1) = 3;
    return {{"Z", FgAbGroup::free_group(1)},
            {"Z/4", z_over(4)},
            {"Z/2 + Z/3", FgAbGroup(2, rel23)}};
}

void criterion_resolutions(CriterionResult& c, std::vector<derive::Resolution>& out) {
    c.title = "Resolution structure (Thm 3.4, Cor 3.5)";
    c.passed = true;
    for (const auto& [name, a] : resolution_targets()) {
        derive::Resolution res = derive::build_resolution(a, 3);
        derive::synth_degeneracies(res);
        derive::synth_connections(res);
        Report vr = derive::validate_resolution(res);
        Report vc = cubical::validate_cubical(res.object.object, cubical::Level::pcpc);
        if (vr.passed() && vc.passed()) {
            c.details.push_back(name + ": pcpc with 0 violations");
        } else {
            c.passed = false;
            c.details.push_back(name + ": " + std::to_string(vr.violations.size() + vc.violations.size()) +
                                " violations");
        }
        out.push_back(std::move(res));
    }
}

void criterion_comparison(CriterionResult& c) {
    c.title = "Comparison theorem (Thm 3.3)";
    c.passed = true;
    auto p = derive::build_resolution(z_over(4), 3, derive::CoverOrder::canonical);
    auto q = derive::build_resolution(z_over(4), 3, derive::CoverOrder::reversed);
    Hom id4 = Hom::identity(z_over(4));
    auto fbar = derive::comparison_lift(id4, p, q, 0);
    auto gbar = derive::comparison_lift(id4, p, q, 1);
    bool distinct = false;
    for (std::size_t n = 0; n <= 3; ++n)
        if (!fbar.components[n].equal_mod_target(gbar.components[n])) distinct = true;
    if (!distinct) {
        c.passed = false;
        c.details.push_back("the two lifts coincide");
    }
    if (!cubical::validate_cubical_morphism(fbar, cubical::Level::precubical).passed() ||
        !cubical::validate_cubical_morphism(gbar, cubical::Level::precubical).passed()) {
        c.passed = false;
        c.details.push_back("a lift fails to commute with the faces");
    }
    auto h = derive::comparison_homotopy(fbar, gbar, p, q);
    Report vh = cubical::validate_precubical_homotopy(h);
    if (!vh.passed()) {
        c.passed = false;
        c.details.push_back("precubical homotopy identities fail");
    } else {
        c.details.push_back("two distinct lifts of id, homotopy verified");
    }
    derive::AdditiveFunctor t = derive::AdditiveFunctor::tensor_with(z_over(6));
    cubical::CubicalMorphism tf{derive::apply_functor(t, fbar.source),
                                derive::apply_functor(t, fbar.target), {}};
    cubical::CubicalMorphism tg = tf;
    for (std::size_t n = 0; n <= 3; ++n) {
        tf.components.push_back(t.on_hom(fbar.components[n]));
        tg.components.push_back(t.on_hom(gbar.components[n]));
    }
    auto nf = norm::normalize_morphism(tf, norm::Variant::N);
    auto ng = norm::normalize_morphism(tg, norm::Variant::N);
    for (std::size_t n = 0; n + 1 <= 3; ++n) {
        Hom hf = chain::induced_on_homology(nf, n);
        Hom hg = chain::induced_on_homology(ng, n);
        if (!hf.equal_mod_target(hg)) {
            c.passed = false;
            c.details.push_back("induced maps differ on H_" + std::to_string(n));
        }
    }
    if (c.passed) c.details.push_back("induced maps on H_n(N(⊗Z/6)) coincide, n <= 2");
}

void criterion_moore(CriterionResult& c, const std::vector<derive::Resolution>& resolutions) {
    c.title = "Cubical Moore theorem (Thm 2.4)";
    c.passed = true;
    auto corpus = corpus_pcpc_objects();
    for (const auto& res : resolutions)
        corpus.emplace_back("resolution of " + res.target.canonical_name(), res.object.object);
    std::size_t checked = 0;
    for (const auto& [name, x] : corpus) {
        auto eq = norm::moore_inclusion_equivalence(x);
        bool ok = chain::validate_chain_map(eq.inclusion).passed() &&
                  chain::validate_chain_map(eq.retraction).passed() &&
                  chain::validate_homotopy(eq.homotopy).passed();
        auto ri = chain::compose(eq.retraction, eq.inclusion);
        for (std::size_t n = 0; n < ri.components.size(); ++n)
            if (!ri.components[n].equal_mod_target(Hom::identity(eq.m.complex.groups[n]))) ok = false;
        for (std::size_t n = 0; n + 1 <= x.dim_bound(); ++n) {
            auto hm = chain::homology(eq.m.complex, n);
            auto hn = chain::homology(eq.n.complex, n);
            if (!hm.group.isomorphic(hn.group)) ok = false;
        }
        if (!ok) {
            c.passed = false;
            c.details.push_back(name + ": Moore equivalence fails");
        }
        ++checked;
    }
    if (c.passed)
        c.details.push_back("r∘i = id, homotopy exact, H(M) = H(N) on " + std::to_string(checked) +
                            " corpus objects");
}

void criterion_splitting(CriterionResult& c) {
    c.title = "Splitting N = M ⊕ F (Thm 2.5)";
    c.passed = true;
    std::size_t checked = 0;
    for (const auto& [name, x] : corpus_cc_objects()) {
        Report r = norm::splitting_check(x);
        if (!r.passed()) {
            c.passed = false;
            c.details.push_back(name + ": " + r.violations.front().identity);
        }
        ++checked;
    }
    if (c.passed)
        c.details.push_back("M ∩ F = 0 and M + F = N on " + std::to_string(checked) +
                            " cc corpus objects, degrees <= 3");
}

void criterion_bad_functors(CriterionResult& c) {
    c.title = "Bad derived functors (Remark 3.8)";
    c.passed = true;
    derive::AdditiveFunctor t = derive::AdditiveFunctor::tensor_with(z_over(6));
    FgAbGroup z = FgAbGroup::free_group(1);
    auto dc = derive::derived_functors(t, z, 3, norm::Variant::C);
    auto dn = derive::derived_functors(t, z, 3, norm::Variant::N);
    auto dm = derive::derived_functors(t, z, 3, norm::Variant::M);
    bool c_ok = dc.size() == 3;
    for (const auto& g : dc) c_ok = c_ok && is_form(g, 0, {6});
    bool nm_ok = is_form(dn[0], 0, {6}) && is_form(dn[1], 0, {}) && is_form(dn[2], 0, {}) &&
                 is_form(dm[0], 0, {6}) && is_form(dm[1], 0, {}) && is_form(dm[2], 0, {});
    if (!c_ok) {
        c.passed = false;
        c.details.push_back("variant C: expected Z/6 in all certified degrees, got " + names(dc));
    }
    if (!nm_ok) {
        c.passed = false;
        c.details.push_back("variants N/M: expected Z/6, 0, 0; got " + names(dn) + " and " + names(dm));
    }
    if (c.passed) c.details.push_back("C gives Z/6, Z/6, Z/6; N and M give Z/6, 0, 0");
}

void criterion_homotopy_groups(CriterionResult& c) {
    c.title = "Homotopy groups of the constant Z/2 group (Props 2.6-2.8, Cor 2.9)";
    c.passed = true;
    auto g = homotopy::constant_group(z_over(2), 3);
    auto p0 = homotopy::pi(g, 0);
    auto p1 = homotopy::pi(g, 1);
    auto p2 = homotopy::pi(g, 2);
    bool forms = p0.abelian_form && is_form(*p0.abelian_form, 0, {2}) && p1.class_count == 1 &&
                 p2.class_count == 1;
    if (!forms) {
        c.passed = false;
        c.details.push_back("expected pi = Z/2, 0, 0");
    }
    for (std::size_t n = 0; n <= 2; ++n) {
        Report r = homotopy::verify_pi_vs_moore(g, n);
        if (!r.passed()) {
            c.passed = false;
            c.details.push_back("pi vs Moore fails at n = " + std::to_string(n));
        }
    }
    if (c.passed)
        c.details.push_back(
            "pi = Z/2, 0, 0 = H(M(G)); filler product = pointwise product, all fillers agree");
}

std::vector<std::pair<std::string, homotopy::FiniteCubicalGroup>> corpus_groups() {
    std::vector<std::pair<std::string, homotopy::FiniteCubicalGroup>> out;
    out.emplace_back("constant Z/2, D=3", homotopy::constant_group(z_over(2), 3));
    out.emplace_back("constant Z/3, D=3", homotopy::constant_group(z_over(3), 3));
    out.emplace_back("point poset over Z/2, D=3",
                     homotopy::linearize_group(
                         cubset::poset_cubical_set(cubset::antichain_poset(1), 3), z_over(2)));
    out.emplace_back("antichain {a,b} over Z/2, D=3",
                     homotopy::linearize_group(
                         cubset::poset_cubical_set(cubset::antichain_poset(2), 3), z_over(2)));
    out.emplace_back("chain 0<1 over Z/2, D=2",
                     homotopy::linearize_group(
                         cubset::poset_cubical_set(cubset::chain_poset(2), 2), z_over(2)));
    return out;
}

void criterion_kan(CriterionResult& c) {
    c.title = "Kan instance (cubical groups with connections are Kan)";
    c.passed = true;
    for (const auto& [name, g] : corpus_groups()) {
        Report r = homotopy::kan_check(g.set, 2);
        if (!r.passed()) {
            c.passed = false;
            c.details.push_back(name + ": open box without filler");
        } else {
            c.details.push_back(name + ": Kan up to degree 2 (" + r.notes.front() + ")");
        }
    }
}

void criterion_em(CriterionResult& c, const std::vector<derive::Resolution>& resolutions) {
    c.title = "Eilenberg-Moore exactness (Props 4.1-4.3)";
    c.passed = true;
    for (const auto& res : resolutions) {
        auto tower = cubical::n_tower(res.object.object);
        auto m = norm::normalize(res.object.object, norm::Variant::M, tower);
        auto n = norm::normalize(res.object.object, norm::Variant::N, tower);
        // M_0 = N_0 = P_0 literally, so the augmentation restricts as is
        chain::AugmentedChainComplex am{m.complex, res.target, res.object.augmentation};
        chain::AugmentedChainComplex an{n.complex, res.target, res.object.augmentation};
        Report rm = derive::em_exact_check(am);
        Report rn = derive::em_exact_check(an);
        if (!rm.passed() || !rn.passed()) {
            c.passed = false;
            c.details.push_back("resolution of " + res.target.canonical_name() + " fails");
        } else {
            c.details.push_back("resolution of " + res.target.canonical_name() +
                                ": M(P) and N(P) exact, N_n(P) free");
        }
    }
}

std::vector<CriterionResult> run_once(std::uint64_t seed) {
    std::vector<CriterionResult> out(9);
    for (int i = 0; i < 9; ++i) out[i].number = i + 1;
    std::vector<derive::Resolution> resolutions;
    criterion_tor(out[0], seed);
    criterion_resolutions(out[1], resolutions);
    criterion_comparison(out[2]);
    criterion_moore(out[3], resolutions);
    criterion_splitting(out[4]);
    criterion_bad_functors(out[5]);
    criterion_homotopy_groups(out[6]);
    criterion_kan(out[7]);
    criterion_em(out[8], resolutions);
    return out;
}

}  // namespace

std::vector<cubset::Poset> corpus_posets() {
    using cubset::make_poset;
    std::vector<cubset::Poset> out;
    out.push_back(cubset::antichain_poset(1));
    out.push_back(cubset::chain_poset(2));
    out.push_back(cubset::antichain_poset(2));
    out.push_back(cubset::chain_poset(3));
    out.push_back(cubset::antichain_poset(3));
    out.push_back(make_poset({"0", "1", "2"}, {{0, 1}, {0, 2}}));  // V
    out.push_back(make_poset({"0", "1", "2"}, {{1, 0}, {2, 0}}));  // Λ
    out.push_back(make_poset({"0", "1", "2"}, {{0, 1}}));          // chain plus point
    return out;
}

std::vector<std::pair<std::string, cubical::CubicalObject>> corpus_cc_objects() {
    std::vector<std::pair<std::string, cubical::CubicalObject>> out;
    out.emplace_back("constant Z", cubical::constant_cubical(FgAbGroup::free_group(1), 3));
    out.emplace_back("constant Z/2", cubical::constant_cubical(z_over(2), 3));
    out.emplace_back("constant Z/6", cubical::constant_cubical(z_over(6), 3));
    auto posets = corpus_posets();
    static const char* poset_names[] = {"point",     "chain 0<1", "antichain 2", "chain 0<1<2",
                                        "antichain 3", "V poset",   "Λ poset",     "chain+point"};
    for (std::size_t i = 0; i < posets.size(); ++i)
        out.emplace_back(std::string("linearized ") + poset_names[i] + " over Z",
                         cubset::linearize(cubset::poset_cubical_set(posets[i], 3),
                                           FgAbGroup::free_group(1)));
    return out;
}

std::vector<std::pair<std::string, cubical::CubicalObject>> corpus_pcpc_objects() {
    return corpus_cc_objects();  // every cc object is in particular pcpc
}

SuiteResult run_acceptance(std::uint64_t seed) {
    SuiteResult out;
    out.seed = seed;
    out.criteria = run_once(seed);

    CriterionResult det;
    det.number = 10;
    det.title = "Determinism (byte-identical reports for a fixed seed)";
    nlohmann::json first = nlohmann::json::array();
    for (const auto& c : out.criteria) {
        nlohmann::json j{{"number", c.number}, {"passed", c.passed}, {"details", c.details}};
        first.push_back(std::move(j));
    }
    auto second_run = run_once(seed);
    nlohmann::json second = nlohmann::json::array();
    for (const auto& c : second_run) {
        nlohmann::json j{{"number", c.number}, {"passed", c.passed}, {"details", c.details}};
        second.push_back(std::move(j));
    }
    det.passed = first.dump() == second.dump();
    det.details.push_back(det.passed ? "two full runs produced byte-identical reports"
                                     : "reports differ between runs");
    out.criteria.push_back(std::move(det));
    return out;
}

nlohmann::json to_json(const SuiteResult& r) {
    nlohmann::json criteria = nlohmann::json::array();
    for (const auto& c : r.criteria)
        criteria.push_back(nlohmann::json{{"number", c.number},
                                          {"title", c.title},
                                          {"passed", c.passed},
                                          {"details", c.details}});
    return nlohmann::json{
        {"kind", "acceptance_suite"}, {"seed", r.seed}, {"passed", r.passed()}, {"criteria", criteria}};
}

}  // namespace mbx::suite
