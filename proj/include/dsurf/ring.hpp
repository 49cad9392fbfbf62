#pragma once

// Canonical-form arithmetic in R = k[x,y,z]/(x^n y - z^2 - h(x) z) and its
// parameter extensions R[T], R[U], R[S,U].

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dsurf/poly.hpp"

namespace dsurf {

enum class RingKind {
    standard,  ///< h(0) != 0, deg h < n
    graded,    ///< h = 0: the associated graded ring x^n y = z^2
    free,      ///< no relation at all
};

class RingSpec {
public:
    /// Validates n >= 2, h in x alone, deg h < n, h(0) != 0.
    static RingSpec standard(FieldSpec field, unsigned n, const Poly& h);
    static RingSpec graded(FieldSpec field, unsigned n);
    static RingSpec free(FieldSpec field);

    /// Same ring with T promoted to a generator (maps must give an image for T).
    RingSpec with_T() const;
    RingSpec without_T() const;

    const FieldSpec& field() const { return d_->field; }
    unsigned n() const { return d_->n; }
    const Poly& h() const { return d_->h; }
    RingKind kind() const { return d_->kind; }
    bool has_T() const { return d_->has_T; }
    bool is_free() const { return d_->kind == RingKind::free; }

    /// x, y, z and T when has_T().
    std::vector<Var> generators() const;
    /// x^n y - z^2 - h z; zero for free rings.
    Poly relation() const;
    /// Same relation and field, ignoring has_T.
    bool compatible(const RingSpec& o) const;

    /// "R(n=2, h=1 + x, field=Q)" with ", graded" / ", free" and a "[T]" suffix.
    std::string to_string() const;

    bool operator==(const RingSpec& o) const { return compatible(o) && has_T() == o.has_T(); }

private:
    struct Data {
        FieldSpec field;
        unsigned n = 0;
        Poly h;
        RingKind kind = RingKind::standard;
        bool has_T = false;
    };
    explicit RingSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// f1 + z*f2 with f1, f2 free of z (free rings keep everything in f1).
class RElem {
public:
    explicit RElem(RingSpec spec);
    RElem(RingSpec spec, Poly f1, Poly f2);

    static RElem constant(const RingSpec& spec, const Scalar& c);
    static RElem constant(const RingSpec& spec, long c) { return constant(spec, Scalar(spec.field(), c)); }
    static RElem generator(const RingSpec& spec, Var v, std::uint32_t e = 1);

    const RingSpec& spec() const { return spec_; }
    const Poly& f1() const { return f1_; }
    const Poly& f2() const { return f2_; }
    bool is_zero() const { return f1_.is_zero() && f2_.is_zero(); }
    bool contains(Var v) const;
    /// The representative f1 + z*f2 as a polynomial.
    Poly to_poly() const;

    RElem operator-() const;
    RElem& operator+=(const RElem& o);
    RElem& operator-=(const RElem& o);
    RElem& operator*=(const RElem& o) { return *this = *this * o; }
    RElem& operator*=(const Scalar& c);
    friend RElem operator+(RElem a, const RElem& b) { return a += b; }
    friend RElem operator-(RElem a, const RElem& b) { return a -= b; }
    friend RElem operator*(const RElem& a, const RElem& b);
    friend RElem operator*(RElem a, const Scalar& c) { return a *= c; }
    friend RElem operator*(const Scalar& c, RElem a) { return a *= c; }

    RElem pow(std::uint32_t e) const;
    /// Multiplies by a z-free monomial.
    RElem mul_monomial(const Monomial& m) const;
    /// Multiplies both components by a z-free polynomial.
    RElem mul_poly(const Poly& p) const;

    /// Reinterprets the components in another compatible spec (e.g. R vs R[T]).
    RElem rebase(const RingSpec& spec) const;

    bool operator==(const RElem& o) const;

private:
    void check_same(const RElem& o) const;

    RingSpec spec_;
    Poly f1_, f2_;
};

RElem normal_form(const RingSpec& spec, const Poly& p);

/// Succeeds iff x^m divides both components; NotDivisible otherwise.
RElem r_x_divide(const RElem& a, std::uint32_t m);

using RBindings = std::map<Var, RElem>;

/// Evaluates an arbitrary polynomial (z allowed to any power) at the images.
RElem r_eval(const Poly& p, const RBindings& images, const RingSpec& target);

/// Ring homomorphism determined by images of variables, landing in `target`.
/// Unbound variables map to the same variable of the target.
RElem r_apply(const RElem& a, const RBindings& images, const RingSpec& target);
inline RElem r_apply(const RElem& a, const RBindings& images) { return r_apply(a, images, a.spec()); }

struct PresentationReduction {
    RingSpec spec;
    /// y_old = y_new + y_shift(x) * z.
    Poly y_shift;
    unsigned steps = 0;

    /// Rewrites a polynomial in the original generators into the reduced ring.
    RElem transport(const Poly& p) const;
};

/// Repeatedly replaces y by y + h0 x^{d-n} z until deg h < n.
PresentationReduction reduce_presentation(FieldSpec field, unsigned n, const Poly& h_raw);

std::string to_string(const RElem& a);

}  // namespace dsurf
