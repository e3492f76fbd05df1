#pragma once

#include "fockcb/canonical.hpp"

#include "json.hpp"

#include <string>

namespace fockcb {

using Json = nlohmann::ordered_json;

/// [[exponent, coefficient], ...] by increasing exponent. Coefficients that
/// do not fit in 64 bits are written as decimal strings.
Json to_json(const LaurentInt& x);
LaurentInt laurent_from_json(const Json& j);

/// [{"partition": "[..]", "coeff": laurent}, ...], largest partition first.
Json to_json(const FockVec& x);
FockVec fock_from_json(const Json& j);

/// {"n", "core", "w", "minus", "order", "rows"}; an empty block gives [].
Json to_json(const DecompMatrix& m);
DecompMatrix matrix_from_json(const Json& j);

/// Aligned text renderings.
std::string to_table(const FockVec& x);
std::string to_table(const DecompMatrix& m);

}  // namespace fockcb
