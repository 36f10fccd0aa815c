#pragma once

// JSON forms of the core types. Keys keep insertion order so output is
// byte-stable.

#include "json.hpp"

#include "annarc/arc_algebra.hpp"
#include "annarc/matching.hpp"

namespace annarc {

using Json = nlohmann::ordered_json;

/// {"n":2, "signs":"+-+-", "arcs":[[1,2,0],[3,4,0]]}
Json to_json(const AffineMatching& m);
/// {"signs":..., "n0":..., "n1":..., "shift":...}
Json to_json(const EvaluationResult& r);
/// {"n0":..., "n1":..., "dims":{"<degree>":<dim>, ...}}
Json to_json(const HomSpace& h);
/// [{"basis":"1⊗X","coeff":"-1"}, ...] in basis order.
Json terms_json(const HomElement& x);
/// One structure-constant record.
Json product_json(const HomElement& x, const HomElement& y, const HomElement& xy);

/// Parses a tensor expression and checks it against the space.
HomElement parse_element(const HomSpace& space, std::string_view text);

}  // namespace annarc
