#pragma once

#include <json.hpp>

#include "padictk/hecke_euler.hpp"
#include "padictk/iwasawa.hpp"
#include "padictk/kubota_leopoldt.hpp"
#include "padictk/leading_terms.hpp"

namespace padictk {

using Json = nlohmann::json;

// every emitted p-adic value carries its precision; digits beyond the
// justified window are never printed
Json padic_to_json(const PadicNumber& x);

// { "p", "N", "M", "coeffs": [decimal strings] }
Json series_to_json(const IwasawaSeries& f);
IwasawaSeries series_from_json(const Json& j);

// { "modulus": f, "generator_images": [[g, e], ...], "order": m },
// canonical dump sorted by generator
Json character_to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const Json& j);

// "omega^2", "trivial", "kronecker(-4)", '*'-separated products, or inline
// JSON in the ingestion format; omega needs the ambient prime
DirichletCharacter parse_character(const std::string& spec, long p);

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

// { "p", "k", "alpha": "num/den", "beta": ..., "eps_p": ... }
HeckeParams hecke_from_json(const Json& j);
// { "p", "w", "psi_p": ..., "psi_pbar": ..., "eps_p": ... }
CMChar cm_from_json(const Json& j);

// { "ring": {"p","a","b"}, "matrix": [[...]] }, entries as coefficient
// arrays or plain integers
FreeMap freemap_from_json(const Json& j);
Json ring_elem_to_json(const RingElem& x);

}  // namespace padictk
