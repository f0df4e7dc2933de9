// moorebox command-line front end. All mathematics goes through the C API
// in moorebox.h; this file only parses flags, reads files and formats
// reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moorebox.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitBadInput = 2;

struct GroupHandle {
    mbx_group* g = nullptr;
    ~GroupHandle() { mbx_group_free(g); }
};
struct ObjectHandle {
    mbx_object* o = nullptr;
    ~ObjectHandle() { mbx_object_free(o); }
};
struct ReportHandle {
    mbx_report* r = nullptr;
    ~ReportHandle() { mbx_report_free(r); }
};

std::string format = "text";

int fail_with(mbx_status status, const std::string& context) {
    std::cerr << "moorebox: " << context << ": " << mbx_last_error() << "\n";
    return status == MBX_ERROR_PARSE ? kExitBadInput : kExitValidationFailure;
}

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json report_json(const mbx_report* r) {
    char* text = nullptr;
    if (mbx_report_to_json(r, &text) != MBX_OK) return json::object();
    json j = json::parse(text);
    mbx_string_free(text);
    return j;
}

void print_core_report_text(const json& j) {
    std::cout << (j.value("passed", false) ? "PASS" : "FAIL") << "  "
              << j.value("subject", std::string{}) << "\n";
    for (const auto& v : j.value("violations", json::array()))
        std::cout << "  violation: " << v.value("where", "") << " — " << v.value("identity", "")
                  << (v.value("detail", std::string{}).empty() ? "" : " (" + v["detail"].get<std::string>() + ")")
                  << "\n";
    for (const auto& n : j.value("notes", json::array())) std::cout << "  " << n.get<std::string>() << "\n";
}

void print_degrees_text(const json& j) {
    for (const auto& d : j.value("degrees", json::array())) {
        std::cout << "H_" << d.value("degree", 0) << " = " << d.value("canonical", std::string{});
        if (d.contains("certified") && !d["certified"].get<bool>()) std::cout << "  (uncertified)";
        std::cout << "\n";
    }
}

int emit_report(const mbx_report* r) {
    json j = report_json(r);
    std::string kind = j.value("kind", std::string{});
    if (format == "json") {
        if (kind == "acceptance_suite") {
            for (const auto& c : j.value("criteria", json::array())) std::cout << c.dump() << "\n";
            json summary{{"kind", "acceptance_suite"},
                         {"seed", j.value("seed", 0ULL)},
                         {"passed", j.value("passed", false)}};
            std::cout << summary.dump() << "\n";
        } else {
            std::cout << j.dump() << "\n";
        }
    } else {
        if (kind == "report") {
            print_core_report_text(j);
        } else if (kind == "homology_report" || kind == "derive_report") {
            print_degrees_text(j);
        } else if (kind == "resolve_report") {
            std::cout << (j.value("passed", false) ? "PASS" : "FAIL")
                      << "  resolution built, pseudodegeneracies and pseudoconnections synthesized\n";
            print_core_report_text(j.value("validation", json::object()));
            print_core_report_text(j.value("pcpc_validation", json::object()));
        } else if (kind == "homotopy_group") {
            std::cout << "pi_" << j.value("degree", 0) << ": " << j.value("classes", 0)
                      << " classes";
            if (j.contains("canonical")) std::cout << ", canonical form " << j["canonical"].get<std::string>();
            std::cout << "\n";
        } else if (kind == "acceptance_suite") {
            for (const auto& c : j.value("criteria", json::array())) {
                std::cout << (c.value("passed", false) ? "PASS" : "FAIL") << "  " << c.value("number", 0)
                          << ". " << c.value("title", std::string{}) << "\n";
                for (const auto& d : c.value("details", json::array()))
                    std::cout << "        " << d.get<std::string>() << "\n";
            }
            std::cout << (j.value("passed", false) ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
        } else {
            std::cout << j.dump(2) << "\n";
        }
    }
    return mbx_report_passed(r) ? kExitOk : kExitValidationFailure;
}

int max_dim() {
    const char* env = std::getenv("MOOREBOX_MAX_DIM");
    if (!env) return 6;
    try {
        return std::stoi(env);
    } catch (...) {
        return 6;
    }
}

bool check_dim(int d, const char* flag) {
    if (d <= max_dim()) return true;
    std::cerr << "moorebox: " << flag << " = " << d << " exceeds the cap " << max_dim()
              << " (set MOOREBOX_MAX_DIM to raise it)\n";
    return false;
}

int parse_group_arg(const std::string& text, GroupHandle& h, const char* flag) {
    mbx_status st = mbx_group_parse(text.c_str(), &h.g);
    if (st != MBX_OK) return fail_with(st, std::string("--") + flag);
    return kExitOk;
}

int load_object(const std::string& path, const std::string& type, ObjectHandle& h) {
    auto text = read_input(path);
    if (!text) {
        std::cerr << "moorebox: cannot read " << path << "\n";
        return kExitBadInput;
    }
    mbx_status st = mbx_object_parse(text->c_str(), type.empty() ? nullptr : type.c_str(), &h.o);
    if (st != MBX_OK) return fail_with(st, path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moorebox: exact cubical homological algebra over f.g. abelian groups"};
    app.require_subcommand(1);
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string input, type, a_text, b_text, functor = "identity", variant = "N";
    std::string poset_path, linearize_text, linearize_group_text;
    int dim_bound = 3, degree = 0, up_to = 1;
    std::uint64_t seed = 0;

    auto* verify = app.add_subcommand("verify", "validate a typed JSON input");
    verify->add_option("input", input, "JSON file, or - for stdin")->required();
    verify->add_option("--type", type, "kind override (group, hom, chain_complex, ...)");

    auto* homology = app.add_subcommand("homology", "normalization complex and homology");
    homology->add_option("input", input, "cubical object JSON")->required();
    homology->add_option("--variant", variant, "N, M, C or F")->capture_default_str();

    auto* resolve = app.add_subcommand("resolve", "projective precubical resolution + synthesis");
    resolve->add_option("--a", a_text, "group (shorthand or JSON)")->required();
    resolve->add_option("--dim-bound", dim_bound, "top degree")->capture_default_str();

    auto* derive = app.add_subcommand("derive", "cubical derived functors");
    derive->add_option("--a", a_text, "group")->required();
    derive->add_option("--functor", functor, "identity, tensor:<group> or hom:<group>")
        ->capture_default_str();
    derive->add_option("--variant", variant, "N, M or C")->capture_default_str();
    derive->add_option("--dim-bound", dim_bound, "top degree")->capture_default_str();

    auto* tor = app.add_subcommand("tor", "classical Tor oracle");
    tor->add_option("--a", a_text, "group")->required();
    tor->add_option("--b", b_text, "group")->required();
    tor->add_option("--n", degree, "degree")->capture_default_str();

    auto* compare = app.add_subcommand("compare", "cubical derived functors vs the Tor oracle");
    compare->add_option("--a", a_text, "group")->required();
    compare->add_option("--b", b_text, "group")->required();
    compare->add_option("--dim-bound", dim_bound, "top degree")->capture_default_str();

    auto* kan = app.add_subcommand("kan", "Kan condition by open-box enumeration");
    kan->add_option("input", input, "finite cubical set or group JSON")->required();
    kan->add_option("--up-to", up_to, "check boxes up to this degree")->capture_default_str();

    auto* pi = app.add_subcommand("pi", "homotopy group of a pointed finite cubical set");
    pi->add_option("input", input, "finite cubical set or group JSON")->required();
    pi->add_option("--n", degree, "degree")->capture_default_str();

    auto* cubeset = app.add_subcommand("cubeset", "build cubical sets from posets");
    cubeset->add_option("--poset", poset_path, "poset JSON file")->required();
    cubeset->add_option("--dim-bound", dim_bound, "top degree")->capture_default_str();
    cubeset->add_option("--linearize", linearize_text, "emit the coeff-span as a cubical object");
    cubeset->add_option("--linearize-group", linearize_group_text,
                        "emit the coeff-span as a finite cubical group (finite coeff)");

    auto* suite = app.add_subcommand("suite", "run the acceptance battery");
    suite->add_option("--seed", seed, "seed for the randomized sweeps")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadInput;
    }

    if (verify->parsed()) {
        ObjectHandle obj;
        if (int rc = load_object(input, type, obj)) return rc;
        ReportHandle rep;
        mbx_status st = mbx_verify(obj.o, &rep.r);
        if (st != MBX_OK) return fail_with(st, "verify");
        return emit_report(rep.r);
    }
    if (homology->parsed()) {
        ObjectHandle obj;
        if (int rc = load_object(input, "cubical_object", obj)) return rc;
        ReportHandle rep;
        mbx_status st = mbx_homology(obj.o, variant.c_str(), &rep.r);
        if (st != MBX_OK) return fail_with(st, "homology");
        return emit_report(rep.r);
    }
    if (resolve->parsed()) {
        if (!check_dim(dim_bound, "dim-bound")) return kExitBadInput;
        GroupHandle a;
        if (int rc = parse_group_arg(a_text, a, "a")) return rc;
        ReportHandle rep;
        mbx_status st = mbx_resolve(a.g, dim_bound, &rep.r);
        if (st != MBX_OK) return fail_with(st, "resolve");
        return emit_report(rep.r);
    }
    if (derive->parsed()) {
        if (!check_dim(dim_bound, "dim-bound")) return kExitBadInput;
        GroupHandle a;
        if (int rc = parse_group_arg(a_text, a, "a")) return rc;
        ReportHandle rep;
        mbx_status st = mbx_derive(a.g, functor.c_str(), variant.c_str(), dim_bound, &rep.r);
        if (st != MBX_OK) return fail_with(st, "derive");
        return emit_report(rep.r);
    }
    if (tor->parsed()) {
        GroupHandle a, b;
        if (int rc = parse_group_arg(a_text, a, "a")) return rc;
        if (int rc = parse_group_arg(b_text, b, "b")) return rc;
        mbx_group* result = nullptr;
        mbx_status st = mbx_tor(a.g, b.g, degree, &result);
        if (st != MBX_OK) return fail_with(st, "tor");
        GroupHandle r{result};
        char* name = nullptr;
        mbx_group_canonical_name(r.g, &name);
        if (format == "json") {
            char* gj = nullptr;
            mbx_group_to_json(r.g, &gj);
            json out{{"kind", "tor_report"}, {"degree", degree}, {"canonical", name},
                     {"group", json::parse(gj)}};
            std::cout << out.dump() << "\n";
            mbx_string_free(gj);
        } else {
            std::cout << name << "\n";
        }
        mbx_string_free(name);
        return kExitOk;
    }
    if (compare->parsed()) {
        if (!check_dim(dim_bound, "dim-bound")) return kExitBadInput;
        GroupHandle a, b;
        if (int rc = parse_group_arg(a_text, a, "a")) return rc;
        if (int rc = parse_group_arg(b_text, b, "b")) return rc;
        ReportHandle rep;
        mbx_status st = mbx_compare_classical(a.g, b.g, dim_bound, &rep.r);
        if (st != MBX_OK) return fail_with(st, "compare");
        return emit_report(rep.r);
    }
    if (kan->parsed()) {
        if (!check_dim(up_to, "up-to")) return kExitBadInput;
        ObjectHandle obj;
        if (int rc = load_object(input, type, obj)) return rc;
        ReportHandle rep;
        mbx_status st = mbx_kan_check(obj.o, up_to, &rep.r);
        if (st != MBX_OK) return fail_with(st, "kan");
        return emit_report(rep.r);
    }
    if (pi->parsed()) {
        if (!check_dim(degree + 1, "n + 1")) return kExitBadInput;
        ObjectHandle obj;
        if (int rc = load_object(input, type, obj)) return rc;
        ReportHandle rep;
        mbx_status st = mbx_homotopy_group(obj.o, degree, &rep.r);
        if (st != MBX_OK) return fail_with(st, "pi");
        return emit_report(rep.r);
    }
    if (cubeset->parsed()) {
        if (!check_dim(dim_bound, "dim-bound")) return kExitBadInput;
        auto text = read_input(poset_path);
        if (!text) {
            std::cerr << "moorebox: cannot read " << poset_path << "\n";
            return kExitBadInput;
        }
        ObjectHandle set;
        mbx_status st = mbx_poset_cubical_set(text->c_str(), dim_bound, &set.o);
        if (st != MBX_OK) return fail_with(st, "cubeset");
        ObjectHandle result;
        mbx_object* emit = set.o;
        if (!linearize_text.empty() || !linearize_group_text.empty()) {
            GroupHandle coeff;
            const std::string& gtext =
                !linearize_text.empty() ? linearize_text : linearize_group_text;
            if (int rc = parse_group_arg(gtext, coeff, "linearize")) return rc;
            st = !linearize_text.empty() ? mbx_linearize(set.o, coeff.g, &result.o)
                                         : mbx_linearize_group(set.o, coeff.g, &result.o);
            if (st != MBX_OK) return fail_with(st, "linearize");
            emit = result.o;
        }
        char* out = nullptr;
        mbx_object_to_json(emit, &out);
        std::cout << out << "\n";
        mbx_string_free(out);
        return kExitOk;
    }
    if (suite->parsed()) {
        ReportHandle rep;
        mbx_status st = mbx_suite(seed, &rep.r);
        if (st != MBX_OK) return fail_with(st, "suite");
        return emit_report(rep.r);
    }
    return kExitBadInput;
}
