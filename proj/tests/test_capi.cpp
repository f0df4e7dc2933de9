#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "moorebox.h"

using nlohmann::json;

namespace {

std::string report_json(mbx_report* r) {
    char* text = nullptr;
    REQUIRE(mbx_report_to_json(r, &text) == MBX_OK);
    std::string out = text;
    mbx_string_free(text);
    return out;
}

}  // namespace

TEST_CASE("group handles") {
    mbx_group* g = nullptr;
    REQUIRE(mbx_group_parse("Z^1 + Z/4", &g) == MBX_OK);
    char* name = nullptr;
    REQUIRE(mbx_group_canonical_name(g, &name) == MBX_OK);
    CHECK(std::string(name) == "Z + Z/4");
    mbx_string_free(name);
    char* j = nullptr;
    REQUIRE(mbx_group_to_json(g, &j) == MBX_OK);
    CHECK(json::parse(j)["kind"] == "group");
    mbx_string_free(j);
    mbx_group_free(g);

    mbx_group* bad = nullptr;
    CHECK(mbx_group_parse("Zebra", &bad) == MBX_ERROR_PARSE);
    CHECK(std::strlen(mbx_last_error()) > 0);
}

TEST_CASE("tor through the C surface") {
    mbx_group *a = nullptr, *b = nullptr, *t = nullptr;
    REQUIRE(mbx_group_parse("Z/4", &a) == MBX_OK);
    REQUIRE(mbx_group_parse("Z/6", &b) == MBX_OK);
    REQUIRE(mbx_tor(a, b, 1, &t) == MBX_OK);
    char* name = nullptr;
    REQUIRE(mbx_group_canonical_name(t, &name) == MBX_OK);
    CHECK(std::string(name) == "Z/2");
    mbx_string_free(name);
    mbx_group_free(t);
    REQUIRE(mbx_tor(a, b, 5, &t) == MBX_OK);
    REQUIRE(mbx_group_canonical_name(t, &name) == MBX_OK);
    CHECK(std::string(name) == "0");
    mbx_string_free(name);
    mbx_group_free(t);
    mbx_group_free(a);
    mbx_group_free(b);
}

TEST_CASE("derive and compare through the C surface") {
    mbx_group *a = nullptr, *b = nullptr;
    REQUIRE(mbx_group_parse("Z", &a) == MBX_OK);
    REQUIRE(mbx_group_parse("Z/6", &b) == MBX_OK);

    mbx_report* rep = nullptr;
    REQUIRE(mbx_derive(a, "tensor:Z/6", "C", 3, &rep) == MBX_OK);
    json j = json::parse(report_json(rep));
    REQUIRE(j["degrees"].size() == 3);
    for (const auto& d : j["degrees"]) CHECK(d["canonical"] == "Z/6");
    mbx_report_free(rep);

    mbx_group* z4 = nullptr;
    REQUIRE(mbx_group_parse("Z/4", &z4) == MBX_OK);
    REQUIRE(mbx_compare_classical(z4, b, 3, &rep) == MBX_OK);
    CHECK(mbx_report_passed(rep) == 1);
    mbx_report_free(rep);

    mbx_group_free(z4);
    mbx_group_free(a);
    mbx_group_free(b);
}

TEST_CASE("resolve emits a valid pcpc resolution") {
    mbx_group* a = nullptr;
    REQUIRE(mbx_group_parse("Z/4", &a) == MBX_OK);
    mbx_report* rep = nullptr;
    REQUIRE(mbx_resolve(a, 3, &rep) == MBX_OK);
    CHECK(mbx_report_passed(rep) == 1);
    json j = json::parse(report_json(rep));
    CHECK(j["resolution"]["object"]["level"] == "pcpc");
    // the emitted resolution re-parses and verifies
    std::string res_text = j["resolution"].dump();
    mbx_object* obj = nullptr;
    REQUIRE(mbx_object_parse(res_text.c_str(), nullptr, &obj) == MBX_OK);
    mbx_report* vrep = nullptr;
    REQUIRE(mbx_verify(obj, &vrep) == MBX_OK);
    CHECK(mbx_report_passed(vrep) == 1);
    mbx_report_free(vrep);
    mbx_object_free(obj);
    mbx_report_free(rep);
    mbx_group_free(a);
}

TEST_CASE("poset pipeline: cubeset, linearize, kan, pi") {
    const char* poset = R"({"kind":"poset","elements":["0","1"],"leq":[["0","1"]]})";
    mbx_object* set = nullptr;
    REQUIRE(mbx_poset_cubical_set(poset, 2, &set) == MBX_OK);

    mbx_report* rep = nullptr;
    REQUIRE(mbx_verify(set, &rep) == MBX_OK);
    CHECK(mbx_report_passed(rep) == 1);
    mbx_report_free(rep);

    mbx_group* z2 = nullptr;
    REQUIRE(mbx_group_parse("Z/2", &z2) == MBX_OK);
    mbx_object* grp = nullptr;
    REQUIRE(mbx_linearize_group(set, z2, &grp) == MBX_OK);

    REQUIRE(mbx_kan_check(grp, 2, &rep) == MBX_OK);
    CHECK(mbx_report_passed(rep) == 1);
    mbx_report_free(rep);

    REQUIRE(mbx_homotopy_group(grp, 1, &rep) == MBX_OK);
    json j = json::parse(report_json(rep));
    CHECK(j["classes"] == 1);
    mbx_report_free(rep);

    mbx_object* lin = nullptr;
    REQUIRE(mbx_linearize(set, z2, &lin) == MBX_OK);
    mbx_report* hrep = nullptr;
    REQUIRE(mbx_homology(lin, "N", &hrep) == MBX_OK);
    json hj = json::parse(report_json(hrep));
    CHECK(hj["degrees"][0]["canonical"] == "Z/2");
    mbx_report_free(hrep);

    mbx_object_free(lin);
    mbx_object_free(grp);
    mbx_object_free(set);
    mbx_group_free(z2);
}

TEST_CASE("error paths") {
    mbx_object* obj = nullptr;
    CHECK(mbx_object_parse("{ broken", nullptr, &obj) == MBX_ERROR_PARSE);
    CHECK(mbx_object_parse(R"({"no":"kind"})", nullptr, &obj) == MBX_ERROR_PARSE);
    mbx_group* g = nullptr;
    REQUIRE(mbx_group_parse("Z/4", &g) == MBX_OK);
    mbx_report* rep = nullptr;
    CHECK(mbx_derive(g, "tensor:Z/6", "Q", 3, &rep) == MBX_ERROR_PARSE);
    CHECK(mbx_resolve(g, -1, &rep) == MBX_ERROR_PARSE);
    mbx_group_free(g);
}
