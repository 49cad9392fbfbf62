#pragma once

// Exact scalars over Q (GMP rationals) and F_p (p < 2^31).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "dsurf/error.hpp"

namespace dsurf {

class FieldSpec {
public:
    /// The rationals.
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec(); }
    /// Throws InvalidField unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// "Q" or "F<p>".
    static FieldSpec parse(std::string_view text);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return p_ == 0; }
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
public:
    explicit Scalar(FieldSpec field = {});
    Scalar(FieldSpec field, long value);
    Scalar(FieldSpec field, const mpz_class& value);
    /// num/den reduced into the field; throws DivisionByZero if den vanishes there.
    Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den);

    static Scalar zero(FieldSpec f) { return Scalar(f); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }

    const FieldSpec& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Characteristic 0 only.
    const mpq_class& rational() const;
    /// Characteristic p only; value in [0, p).
    std::uint32_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar inv() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    bool operator==(const Scalar& o) const;
    /// Canonical total order: numeric on Q, residue value on F_p.
    std::strong_ordering operator<=>(const Scalar& o) const;

    /// "a", "-a", "a/b" on Q; the residue on F_p.
    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    FieldSpec field_;
    std::variant<std::uint32_t, mpq_class> value_;
};

/// Image of the integer binomial C(i, j) in the field (0 when j > i).
/// Prime characteristic uses Lucas' theorem, so i may be large.
Scalar binom(std::uint64_t i, std::uint64_t j, FieldSpec field);

/// All mu with mu^d = c, ascending in the canonical order. Over F_p the
/// scan is exhaustive and refuses p > scan_limit.
std::vector<Scalar> nth_roots(const Scalar& c, unsigned d, std::uint32_t scan_limit = 10000);

}  // namespace dsurf
