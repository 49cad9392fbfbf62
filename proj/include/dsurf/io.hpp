#pragma once

// Text formats: polynomials, ring specs, weight vectors, maps, automorphism
// words and theorem coefficients.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := int | int '/' int | var | '(' expr ')'
//
// No implicit multiplication; exponents are at most 10^6.

#include <optional>
#include <string>
#include <string_view>

#include "dsurf/autgroup.hpp"
#include "dsurf/expmap.hpp"

namespace dsurf {

Poly parse_poly(std::string_view text, const FieldSpec& field);
Scalar parse_scalar(std::string_view text, const FieldSpec& field);
inline std::string print_poly(const Poly& p) { return to_string(p); }

/// "R(n=2, h=1+x, field=Q)", "R(n=2, field=F3, graded)", "R(field=Q, free)",
/// with an optional "[T]" suffix. The field may be omitted when a fallback is given.
RingSpec parse_ring(std::string_view text, std::optional<FieldSpec> fallback = std::nullopt);

/// "w{x:0, y:2, z:1}"; values are integers or fractions.
WeightVector parse_weights(std::string_view text);
std::string to_string(const WeightVector& w);

/// "x -> x; z -> z + x^2*U; y -> ..."; images are normalized in `spec`.
RBindings parse_map(std::string_view text, const RingSpec& spec);
std::string to_string(const RBindings& images);

/// "L(2) * T * E(x+1)": the composition, rightmost factor acting first. "id" is the identity.
Automorphism parse_word(std::string_view text, const RingSpec& spec);
std::string to_string(const Word& w);

/// "1: 1 + x; 5: x^2" as (exponent, f_e) pairs.
TheoremCoefficients parse_coeffs(std::string_view text, const FieldSpec& field);

}  // namespace dsurf
