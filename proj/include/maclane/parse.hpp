#ifndef MACLANE_PARSE_HPP
#define MACLANE_PARSE_HPP

/* Text and JSON surfaces: the polynomial expression grammar (integer and
 * b/c rational literals, x, the prime literal p, + - * ^, parentheses; no
 * floating literals), valuation and model JSON, DOT emission. */

#include <string>

#include "maclane/divisor.hpp"
#include "maclane/resolution.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

Rat parse_rational(const std::string& text);
Poly parse_poly(const std::string& text, std::uint64_t p);

/// `[{"phi": "x", "lambda": "3/8"}, ...]`
std::string valuation_json(const InductiveValuation& v);
InductiveValuation valuation_from_json(const std::string& text, const BaseField& base);

std::string model_json(const Model& m);
Model model_from_json(const std::string& text, const BaseField& base);

/// One node per valuation labeled mult=<e>, edges along the dual graph,
/// nodes emitted in dual-graph preorder; odd components filled when a
/// parity profile is supplied.
std::string model_dot(const Model& m, const DivisorProfile* parity = nullptr);

} // namespace maclane

#endif
