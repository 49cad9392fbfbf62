#pragma once

#include <map>
#include <random>
#include <string_view>

#include "dsurf/io.hpp"

namespace support {

using namespace dsurf;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec F(std::uint64_t p) { return FieldSpec::prime(p); }

inline Poly P(std::string_view text, FieldSpec f = {}) { return parse_poly(text, f); }
inline RingSpec ring(unsigned n, std::string_view h, FieldSpec f = {}) { return RingSpec::standard(f, n, P(h, f)); }
inline RElem E(const RingSpec& spec, std::string_view text) { return normal_form(spec, P(text, spec.field())); }
inline Scalar S(FieldSpec f, long v) { return Scalar(f, v); }

using Point = std::map<Var, Scalar>;

/// Term-by-term evaluation; every variable of p must be bound.
inline Scalar eval(const Poly& p, const Point& pt) {
    Scalar acc = Scalar::zero(p.field());
    for (const auto& [m, c] : p.terms()) {
        Scalar t = c;
        for (Var v : kAllVars)
            for (std::uint32_t e = 0; e < m[v]; ++e) t *= pt.at(v);
        acc += t;
    }
    return acc;
}

inline Scalar eval(const RElem& a, const Point& pt) { return eval(a.to_poly(), pt); }

/// Random point of the surface: x != 0, z, T, U, S free, y = (z^2 + h z) / x^n.
inline Point surface_point(const RingSpec& spec, std::mt19937_64& rng, long bound = 7) {
    const FieldSpec f = spec.field();
    std::uniform_int_distribution<long> d(-bound, bound);
    Point pt;
    do pt[Var::x] = Scalar(f, d(rng));
    while (pt[Var::x].is_zero());
    for (Var v : {Var::z, Var::T, Var::U, Var::S}) pt[v] = Scalar(f, d(rng));
    if (spec.is_free()) {
        pt[Var::y] = Scalar(f, d(rng));
    } else {
        const Scalar z = pt[Var::z];
        pt[Var::y] = (z * z + eval(spec.h(), pt) * z) / pt[Var::x].pow(spec.n());
    }
    return pt;
}

}  // namespace support
