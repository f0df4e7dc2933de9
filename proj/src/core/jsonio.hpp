#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "core/chain.hpp"
#include "core/cubical.hpp"
#include "core/cubset.hpp"
#include "core/derive.hpp"
#include "core/homotopy.hpp"
#include "core/report.hpp"
#include "core/simplicial.hpp"

namespace mbx::io {

using nlohmann::json;

// Integers are serialized as decimal strings to preserve arbitrary
// precision; readers accept plain JSON numbers as well.
json encode(const exactalg::Int& v);
exactalg::Int decode_int(const json& j);

json encode(const exactalg::IntMatrix& m);
exactalg::IntMatrix decode_matrix(const json& j);

json encode(const exactalg::FgAbGroup& g);
// Accepts {"generators", "relations"}, shorthand {"free_rank", "torsion"},
// or a shorthand string like "Z^2 + Z/4".
exactalg::FgAbGroup decode_group(const json& j);
// "Z", "Z^2", "Z/4", "Z + Z/2 + Z/4", "0"; also inline JSON when the string
// starts with '{'.
exactalg::FgAbGroup parse_group(const std::string& text);

json encode(const exactalg::Hom& h);
exactalg::Hom decode_hom(const json& j);

json encode(const chain::ChainComplex& c);
chain::ChainComplex decode_chain_complex(const json& j);
json encode(const chain::AugmentedChainComplex& c);
chain::AugmentedChainComplex decode_augmented_chain_complex(const json& j);

json encode(const cubical::CubicalObject& x);
cubical::CubicalObject decode_cubical_object(const json& j);
json encode(const cubical::AugmentedCubicalObject& x);
cubical::AugmentedCubicalObject decode_augmented_cubical_object(const json& j);

json encode(const simplicial::SimplicialObject& s);
simplicial::SimplicialObject decode_simplicial_object(const json& j);
json encode(const simplicial::AugmentedPseudoSimplicial& s);
simplicial::AugmentedPseudoSimplicial decode_augmented_pseudosimplicial(const json& j);

json encode(const cubset::Poset& p);
cubset::Poset decode_poset(const json& j);

json encode(const cubset::FiniteCubicalSet& x);
cubset::FiniteCubicalSet decode_finite_cubical_set(const json& j);

json encode(const homotopy::FiniteCubicalGroup& g);
homotopy::FiniteCubicalGroup decode_finite_cubical_group(const json& j);

json encode(const derive::Resolution& r);

json encode(const Report& r);

json encode(const homotopy::HomotopyGroupResult& r);

// Additive functor descriptors: "identity", "tensor:<group>", "hom:<group>".
derive::AdditiveFunctor parse_functor(const std::string& text);

// Parses text as JSON, rethrowing with a position-annotated ParseError.
json parse_json(const std::string& text);

// Dispatch on the "kind" field (or an explicit kind override), validate the
// object, and return the report.
Report verify_any(const json& j, const std::string& kind_override = "");

}  // namespace mbx::io
