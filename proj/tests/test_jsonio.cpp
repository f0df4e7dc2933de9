#include <doctest.h>

#include "core/error.hpp"
#include "core/derive.hpp"
#include "core/jsonio.hpp"

using namespace mbx;
using namespace mbx::io;
using exactalg::FgAbGroup;
using exactalg::Hom;
using exactalg::Int;
using exactalg::IntMatrix;

TEST_CASE("group shorthand parsing") {
    CHECK(parse_group("0").is_trivial());
    CHECK(parse_group("Z").free_rank() == 1);
    CHECK(parse_group("Z^3").free_rank() == 3);
    CHECK(parse_group("Z/4").invariant_factors() == std::vector<Int>{4});
    FgAbGroup g = parse_group("Z^2 + Z/2 + Z/4");
    CHECK(g.free_rank() == 2);
    CHECK(g.invariant_factors() == std::vector<Int>{Int(2), Int(4)});
    CHECK(parse_group("Z/2 + Z/3").isomorphic(FgAbGroup::cyclic(6)));
    CHECK(parse_group("Z/0").free_rank() == 1);
    CHECK(parse_group("Z/1").is_trivial());
    CHECK_THROWS_AS(parse_group("Q"), ParseError);
    CHECK_THROWS_AS(parse_group(""), ParseError);
    // arbitrary precision orders survive
    CHECK(parse_group("Z/36893488147419103232").invariant_factors() ==
          std::vector<Int>{Int("36893488147419103232")});
}

TEST_CASE("group JSON round trip") {
    IntMatrix rel(2, 1);
    rel.at(0, 0) = 2;
    FgAbGroup g(2, rel);
    json j = encode(g);
    FgAbGroup back = decode_group(j);
    CHECK(back.same_presentation(g));
    CHECK(decode_group(json::parse(R"({"free_rank":1,"torsion":["2"]})")).isomorphic(g));
    // integers serialized as decimal strings
    CHECK(j["relations"][0][0].is_string());
}

TEST_CASE("hom JSON round trip") {
    FgAbGroup z = FgAbGroup::free_group(1), z4 = FgAbGroup::cyclic(4);
    Hom h(z, z4, IntMatrix::from_rows({{3}}));
    Hom back = decode_hom(encode(h));
    CHECK(back.matrix() == h.matrix());
    CHECK(back.source().same_presentation(z));
    CHECK(back.target().same_presentation(z4));
}

TEST_CASE("cubical object JSON round trip") {
    auto x = cubical::constant_cubical(FgAbGroup::cyclic(2), 3);
    json j = encode(x);
    auto back = decode_cubical_object(j);
    CHECK(back.level == x.level);
    CHECK(back.dim_bound() == 3);
    CHECK(cubical::validate_cubical(back, cubical::Level::cc).passed());
    CHECK(encode(back) == j);
}

TEST_CASE("finite cubical set and group JSON round trip") {
    auto set = cubset::poset_cubical_set(cubset::chain_poset(2), 2);
    json j = encode(set);
    auto back = decode_finite_cubical_set(j);
    CHECK(back.count(2) == set.count(2));
    CHECK(cubset::validate_cubical_set(back).passed());
    CHECK(encode(back) == j);

    auto g = homotopy::constant_group(FgAbGroup::cyclic(2), 2);
    json jg = encode(g);
    auto gback = decode_finite_cubical_group(jg);
    CHECK(homotopy::validate_cubical_group(gback).passed());
    CHECK(encode(gback) == jg);
}

TEST_CASE("poset JSON round trip") {
    json j = json::parse(R"({"kind":"poset","elements":["0","1"],"leq":[["0","1"]]})");
    auto p = decode_poset(j);
    CHECK(p.leq[0][1]);
    auto back = decode_poset(encode(p));
    CHECK(back.leq == p.leq);
}

TEST_CASE("chain complex JSON round trip") {
    FgAbGroup z = FgAbGroup::free_group(1);
    chain::ChainComplex c{{z, z}, {Hom(z, z, IntMatrix::from_rows({{2}}))}};
    json j = encode(c);
    auto back = decode_chain_complex(j);
    CHECK(chain::validate_complex(back).passed());
    CHECK(encode(back) == j);

    chain::AugmentedChainComplex a{c, FgAbGroup::cyclic(2), Hom(z, FgAbGroup::cyclic(2), IntMatrix::identity(1))};
    auto aback = decode_augmented_chain_complex(encode(a));
    CHECK(aback.augmentation.matrix().is_identity());
}

TEST_CASE("resolution JSON re-parses and validates") {
    auto res = derive::build_resolution(FgAbGroup::cyclic(4), 2);
    derive::synth_degeneracies(res);
    derive::synth_connections(res);
    json j = encode(res);
    Report r = verify_any(j);
    CHECK(r.passed());
}

TEST_CASE("verify dispatch and parse errors") {
    CHECK(verify_any(json::parse(R"({"kind":"group","generators":1,"relations":[["4"]]})")).passed());
    CHECK_THROWS_AS(verify_any(json::parse(R"({"kind":"nonsense"})")), ParseError);
    CHECK_THROWS_AS(parse_json("{ not json"), ParseError);
    try {
        parse_json("{\"a\": }");
    } catch (const ParseError& e) {
        // nlohmann messages are position annotated
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
}

TEST_CASE("functor descriptors") {
    CHECK(parse_functor("identity").kind() == derive::AdditiveFunctor::Kind::identity);
    auto t = parse_functor("tensor:Z/6");
    CHECK(t.kind() == derive::AdditiveFunctor::Kind::tensor_with);
    CHECK(t.argument().isomorphic(FgAbGroup::cyclic(6)));
    CHECK(parse_functor("hom:Z/2").kind() == derive::AdditiveFunctor::Kind::hom_from);
    CHECK_THROWS_AS(parse_functor("cotensor:Z"), ParseError);
}
