#pragma once

#include <span>
#include <vector>

#include "json.hpp"
#include "kdet/alexander.hpp"
#include "kdet/exact.hpp"
#include "kdet/polytope.hpp"
#include "kdet/states.hpp"

namespace kdet {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& x);
// {"coeffs": {"0": c0, "1": c1, ...}}, zero coefficients omitted.
Json to_json(const IntPolynomial& p);
// {"<crossing>": region, ...}
Json to_json(const Universe& u, const KauffmanState& st);
Json to_json(const Universe& u, std::span<const KauffmanState> states);
Json to_json(const Universe& u, const ClockLattice& lattice);
Json to_json(const LatticePoint& x);
Json to_json(const Simplex& s);

}  // namespace kdet
