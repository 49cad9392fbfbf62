#include "dsurf/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <tuple>
#include <utility>

namespace dsurf {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::IllegalExponent: return "IllegalExponent";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::StepLimit: return "StepLimit";
    case ErrorCode::TrivialMap: return "TrivialMap";
    case ErrorCode::InhomogeneousTarget: return "InhomogeneousTarget";
    case ErrorCode::InvalidMu: return "InvalidMu";
    case ErrorCode::NotEndomorphism: return "NotEndomorphism";
    case ErrorCode::NotOfLemmaForm: return "NotOfLemmaForm";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnreducedSpec: return "UnreducedSpec";
    case ErrorCode::IllegalParameters: return "IllegalParameters";
    case ErrorCode::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31))
        throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
    return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        std::uint64_t p = 0;
        auto body = text.substr(1);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
    }
    throw Error(ErrorCode::InvalidField, "expected \"Q\" or \"F<p>\", got \"" + std::string(text) + "\"");
}

std::string FieldSpec::to_string() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid on signed 64-bit values.
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar::Scalar(FieldSpec field) : field_(field) {
    if (field_.is_rational())
        value_ = mpq_class(0);
    else
        value_ = std::uint32_t{0};
}

Scalar::Scalar(FieldSpec field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(FieldSpec field, const mpz_class& value) : field_(field) {
    if (field_.is_rational())
        value_ = mpq_class(value);
    else
        value_ = reduce(value, field_.characteristic());
}

Scalar::Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den) : field_(field) {
    if (field_.is_rational()) {
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        value_ = std::move(q);
    } else {
        const auto p = field_.characteristic();
        const auto d = reduce(den, p);
        if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field_.to_string());
        value_ = static_cast<std::uint32_t>(std::uint64_t{reduce(num, p)} * inv_mod(d, p) % p);
    }
}

bool Scalar::is_zero() const {
    if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a rational scalar");
    return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
    if (field_.is_rational()) throw Error(ErrorCode::FieldMismatch, "not a residue");
    return std::get<std::uint32_t>(value_);
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_)
        throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (auto* v = std::get_if<std::uint32_t>(&r.value_)) {
        if (*v != 0) *v = field_.characteristic() - *v;
    } else {
        auto& q = std::get<mpq_class>(r.value_);
        q = -q;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (auto* v = std::get_if<std::uint32_t>(&value_)) {
        const std::uint64_t s = std::uint64_t{*v} + std::get<std::uint32_t>(o.value_);
        *v = static_cast<std::uint32_t>(s % field_.characteristic());
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (auto* v = std::get_if<std::uint32_t>(&value_)) {
        const std::uint64_t s = std::uint64_t{*v} * std::get<std::uint32_t>(o.value_);
        *v = static_cast<std::uint32_t>(s % field_.characteristic());
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    }
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Scalar r(*this);
    if (auto* v = std::get_if<std::uint32_t>(&r.value_)) {
        *v = inv_mod(*v, field_.characteristic());
    } else {
        auto& q = std::get<mpq_class>(r.value_);
        q = 1 / q;
    }
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar result = one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && value_ == o.value_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    check_same(o);
    if (auto* v = std::get_if<std::uint32_t>(&value_)) return *v <=> std::get<std::uint32_t>(o.value_);
    const int c = cmp(std::get<mpq_class>(value_), std::get<mpq_class>(o.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
    if (auto* v = std::get_if<std::uint32_t>(&value_)) return std::to_string(*v);
    return std::get<mpq_class>(value_).get_str();
}

Scalar binom(std::uint64_t i, std::uint64_t j, FieldSpec field) {
    if (j > i) return Scalar::zero(field);
    if (field.is_rational()) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), i, j);
        return Scalar(field, b);
    }
    // Lucas: C(i, j) = prod C(i_k, j_k) over base-p digits.
    const std::uint64_t p = field.characteristic();
    Scalar result = Scalar::one(field);
    while (j > 0 || i > 0) {
        const std::uint64_t ik = i % p, jk = j % p;
        if (jk > ik) return Scalar::zero(field);
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), ik, jk);
        result *= Scalar(field, b);
        i /= p;
        j /= p;
    }
    return result;
}

std::vector<Scalar> nth_roots(const Scalar& c, unsigned d, std::uint32_t scan_limit) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "root degree must be positive");
    if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "nth_roots of zero");
    const FieldSpec f = c.field();
    std::vector<Scalar> out;
    if (!f.is_rational()) {
        const std::uint32_t p = f.characteristic();
        if (p > scan_limit)
            throw Error(ErrorCode::InvalidField,
                        "root scan over " + f.to_string() + " exceeds limit " + std::to_string(scan_limit));
        for (std::uint32_t m = 1; m < p; ++m) {
            Scalar mu(f, static_cast<long>(m));
            if (mu.pow(d) == c) out.push_back(mu);
        }
        return out;
    }
    const mpq_class& q = c.rational();
    const bool negative = sgn(q) < 0;
    if (negative && d % 2 == 0) return out;
    mpz_class num = abs(q.get_num()), den = q.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d)) return out;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d)) return out;
    Scalar root(f, negative ? mpz_class(-rn) : rn, rd);
    if (d % 2 == 0) {
        out.push_back(-root);
        out.push_back(root);
        std::sort(out.begin(), out.end());
    } else {
        out.push_back(root);
    }
    return out;
}

}  // namespace dsurf
