#pragma once

// Sparse multivariate polynomials over a FieldSpec in the fixed alphabet
// {x, y, z, T, U, S}.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dsurf/scalar.hpp"

namespace dsurf {

enum class Var : std::uint8_t { x, y, z, T, U, S };
inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::x, Var::y, Var::z, Var::T, Var::U, Var::S};

char var_name(Var v);
/// Accepts x y z T U S and the aliases X Y Z.
std::optional<Var> var_from_char(char c);

struct Monomial {
    std::array<std::uint32_t, kNumVars> exp{};

    static Monomial of(Var v, std::uint32_t e = 1) {
        Monomial m;
        m.exp[static_cast<std::size_t>(v)] = e;
        return m;
    }
    static Monomial of(std::initializer_list<std::pair<Var, std::uint32_t>> powers);

    std::uint32_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
    std::uint32_t& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }
    std::uint64_t total() const;
    bool is_one() const { return total() == 0; }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial&) const = default;
};

/// Descending graded lex, variable priority z > y > x > T > U > S.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact rational weights per variable; "undefined" is distinct from 0.
class WeightVector {
public:
    WeightVector() = default;
    WeightVector(std::initializer_list<std::pair<Var, mpq_class>> w);

    void set(Var v, mpq_class w) { weights_[v] = std::move(w); }
    bool defined(Var v) const { return weights_.count(v) != 0; }
    /// Throws InvalidArgument when v has no weight.
    const mpq_class& at(Var v) const;
    const std::map<Var, mpq_class>& entries() const { return weights_; }

    bool operator==(const WeightVector&) const = default;

private:
    std::map<Var, mpq_class> weights_;
};

class Poly {
public:
    using Terms = std::map<Monomial, Scalar, MonomialOrder>;

    explicit Poly(FieldSpec field = {}) : field_(field) {}

    static Poly constant(const Scalar& c);
    static Poly constant(FieldSpec f, long c) { return constant(Scalar(f, c)); }
    static Poly var(FieldSpec f, Var v, std::uint32_t e = 1);
    static Poly term(const Scalar& c, const Monomial& m);

    const FieldSpec& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_constant() const;
    Scalar constant_term() const { return coefficient(Monomial{}); }
    Scalar coefficient(const Monomial& m) const;

    bool contains(Var v) const;
    /// nullopt for the zero polynomial.
    std::optional<std::uint32_t> degree(Var v) const;
    std::uint64_t total_degree() const;

    /// Adds c·m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Scalar& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }

    Poly pow(std::uint32_t e) const;
    Poly mul_monomial(const Monomial& m) const;

    bool operator==(const Poly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

private:
    void check_same(const Poly& o) const;

    FieldSpec field_;
    Terms terms_;
};

using Bindings = std::map<Var, Poly>;

/// Homomorphic image of p; unbound variables map to themselves.
Poly substitute(const Poly& p, const Bindings& bindings);

/// Coefficient of v^k as a polynomial in the remaining variables.
Poly coeff_of(const Poly& p, Var v, std::uint32_t k);

/// Max over terms of sum exponent*weight; nullopt encodes -infinity.
std::optional<mpq_class> weighted_degree(const Poly& p, const WeightVector& w);

/// Terms achieving weighted_degree; throws InvalidArgument on zero.
Poly top_part(const Poly& p, const WeightVector& w);

/// q with p = x^m * q; NotDivisible names the offending term otherwise.
Poly x_power_divide(const Poly& p, std::uint32_t m);

std::string to_string(const Monomial& m);
/// Canonical text: descending order, unit coefficients elided except the constant.
std::string to_string(const Poly& p);

}  // namespace dsurf
