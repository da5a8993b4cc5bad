#pragma once

#include <json.hpp>

#include "hkdv/exp_poly.hpp"
#include "hkdv/monomial.hpp"
#include "hkdv/t_poly.hpp"

namespace hkdv {

// Wire form of an exponential sum: [[k, "num/den"], ...] sorted by k.
// Values carrying beta powers serialize as [[k, a, "num/den"], ...].
nlohmann::json exppoly_json(const ExpPoly& p);

// "p_1^2*p_2" / "t_0^3*t_1" spellings used across text and JSON output.
std::string p_mono_str(const Mono& m);
std::string t_mono_str(const Mono& m);

// {"monomial": ..., "coeff": ...} rows in canonical monomial order.
nlohmann::json tpoly_json(const TPoly& poly);

}  // namespace hkdv
