#include "dsurf/ring.hpp"

#include <vector>

namespace dsurf {

namespace {

bool only_x(const Poly& p) {
    for (Var v : kAllVars)
        if (v != Var::x && p.contains(v)) return false;
    return true;
}

}  // namespace

RingSpec RingSpec::standard(FieldSpec field, unsigned n, const Poly& h) {
    if (n < 2) throw Error(ErrorCode::InvalidSpec, "n must be at least 2");
    if (h.field() != field) throw Error(ErrorCode::FieldMismatch, "h is over " + h.field().to_string());
    if (!only_x(h)) throw Error(ErrorCode::InvalidSpec, "h must be a polynomial in x alone: " + dsurf::to_string(h));
    if (h.constant_term().is_zero()) throw Error(ErrorCode::InvalidSpec, "h(0) must be nonzero: h = " + dsurf::to_string(h));
    if (*h.degree(Var::x) >= n)
        throw Error(ErrorCode::UnreducedSpec,
                    "deg h = " + std::to_string(*h.degree(Var::x)) + " >= n = " + std::to_string(n) +
                        "; reduce the presentation first");
    return RingSpec(std::make_shared<const Data>(Data{field, n, h, RingKind::standard, false}));
}

RingSpec RingSpec::graded(FieldSpec field, unsigned n) {
    if (n < 2) throw Error(ErrorCode::InvalidSpec, "n must be at least 2");
    return RingSpec(std::make_shared<const Data>(Data{field, n, Poly(field), RingKind::graded, false}));
}

RingSpec RingSpec::free(FieldSpec field) {
    return RingSpec(std::make_shared<const Data>(Data{field, 0, Poly(field), RingKind::free, false}));
}

RingSpec RingSpec::with_T() const {
    if (has_T()) return *this;
    Data d = *d_;
    d.has_T = true;
    return RingSpec(std::make_shared<const Data>(std::move(d)));
}

RingSpec RingSpec::without_T() const {
    if (!has_T()) return *this;
    Data d = *d_;
    d.has_T = false;
    return RingSpec(std::make_shared<const Data>(std::move(d)));
}

std::vector<Var> RingSpec::generators() const {
    std::vector<Var> g{Var::x, Var::y, Var::z};
    if (has_T()) g.push_back(Var::T);
    return g;
}

Poly RingSpec::relation() const {
    const FieldSpec f = field();
    if (is_free()) return Poly(f);
    return Poly::term(Scalar::one(f), Monomial::of({{Var::x, n()}, {Var::y, 1}})) - Poly::var(f, Var::z, 2) -
           h() * Poly::var(f, Var::z);
}

bool RingSpec::compatible(const RingSpec& o) const {
    if (d_ == o.d_) return true;
    return field() == o.field() && kind() == o.kind() && n() == o.n() && h() == o.h();
}

std::string RingSpec::to_string() const {
    std::string out = "R(";
    if (!is_free()) out += "n=" + std::to_string(n()) + ", h=" + dsurf::to_string(h()) + ", ";
    out += "field=" + field().to_string();
    if (kind() == RingKind::graded) out += ", graded";
    if (kind() == RingKind::free) out += ", free";
    out += ")";
    if (has_T()) out += "[T]";
    return out;
}

RElem::RElem(RingSpec spec) : spec_(std::move(spec)), f1_(spec_.field()), f2_(spec_.field()) {}

RElem::RElem(RingSpec spec, Poly f1, Poly f2) : spec_(std::move(spec)), f1_(std::move(f1)), f2_(std::move(f2)) {
    if (f1_.field() != spec_.field() || f2_.field() != spec_.field())
        throw Error(ErrorCode::FieldMismatch, "component over a different field");
    if (spec_.is_free()) {
        if (!f2_.is_zero()) throw Error(ErrorCode::InvalidArgument, "free ring elements keep f2 = 0");
    } else if (f1_.contains(Var::z) || f2_.contains(Var::z)) {
        throw Error(ErrorCode::InvalidArgument, "RElem components must not contain z");
    }
}

RElem RElem::constant(const RingSpec& spec, const Scalar& c) {
    return RElem(spec, Poly::constant(c), Poly(spec.field()));
}

RElem RElem::generator(const RingSpec& spec, Var v, std::uint32_t e) {
    return normal_form(spec, Poly::var(spec.field(), v, e));
}

bool RElem::contains(Var v) const {
    if (v == Var::z && !spec_.is_free()) return !f2_.is_zero();
    return f1_.contains(v) || f2_.contains(v);
}

Poly RElem::to_poly() const {
    if (f2_.is_zero()) return f1_;
    return f1_ + f2_.mul_monomial(Monomial::of(Var::z));
}

void RElem::check_same(const RElem& o) const {
    if (!spec_.compatible(o.spec_))
        throw Error(ErrorCode::SpecMismatch, spec_.to_string() + " vs " + o.spec_.to_string());
}

RElem RElem::operator-() const { return RElem(spec_, -f1_, -f2_); }

RElem& RElem::operator+=(const RElem& o) {
    check_same(o);
    f1_ += o.f1_;
    f2_ += o.f2_;
    return *this;
}

RElem& RElem::operator-=(const RElem& o) {
    check_same(o);
    f1_ -= o.f1_;
    f2_ -= o.f2_;
    return *this;
}

RElem& RElem::operator*=(const Scalar& c) {
    f1_ *= c;
    f2_ *= c;
    return *this;
}

RElem operator*(const RElem& a, const RElem& b) {
    a.check_same(b);
    const RingSpec& spec = a.spec_;
    if (spec.is_free()) return RElem(spec, a.f1_ * b.f1_, Poly(spec.field()));
    // (f1 + z f2)(g1 + z g2) = f1 g1 + x^n y f2 g2 + z (f1 g2 + f2 g1 - h f2 g2)
    Poly f1 = a.f1_ * b.f1_;
    Poly f2 = a.f1_ * b.f2_ + a.f2_ * b.f1_;
    if (!a.f2_.is_zero() && !b.f2_.is_zero()) {
        const Poly prod = a.f2_ * b.f2_;
        f1 += prod.mul_monomial(Monomial::of({{Var::x, spec.n()}, {Var::y, 1}}));
        if (!spec.h().is_zero()) f2 -= spec.h() * prod;
    }
    return RElem(spec, std::move(f1), std::move(f2));
}

RElem RElem::pow(std::uint32_t e) const {
    RElem result = constant(spec_, 1);
    RElem base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

RElem RElem::mul_monomial(const Monomial& m) const {
    if (m[Var::z] != 0 && !spec_.is_free()) return *this * normal_form(spec_, Poly::term(Scalar::one(spec_.field()), m));
    return RElem(spec_, f1_.mul_monomial(m), f2_.mul_monomial(m));
}

RElem RElem::mul_poly(const Poly& p) const {
    if (p.contains(Var::z) && !spec_.is_free()) return *this * normal_form(spec_, p);
    return RElem(spec_, f1_ * p, f2_ * p);
}

RElem RElem::rebase(const RingSpec& spec) const {
    if (!spec_.compatible(spec))
        throw Error(ErrorCode::SpecMismatch, spec_.to_string() + " vs " + spec.to_string());
    return RElem(spec, f1_, f2_);
}

bool RElem::operator==(const RElem& o) const {
    return spec_.compatible(o.spec_) && f1_ == o.f1_ && f2_ == o.f2_;
}

RElem normal_form(const RingSpec& spec, const Poly& p) {
    if (p.field() != spec.field()) throw Error(ErrorCode::FieldMismatch, "polynomial over another field");
    const FieldSpec f = spec.field();
    if (spec.is_free()) return RElem(spec, p, Poly(f));
    const auto zdeg = p.degree(Var::z);
    if (!zdeg) return RElem(spec);

    const Poly xny = Poly::term(Scalar::one(f), Monomial::of({{Var::x, spec.n()}, {Var::y, 1}}));
    // z^k = a_k + z b_k; z^{k+1} = b_k x^n y + z (a_k - h b_k)
    Poly a = Poly::constant(f, 1), b(f);
    Poly f1(f), f2(f);
    for (std::uint32_t k = 0; k <= *zdeg; ++k) {
        const Poly c = coeff_of(p, Var::z, k);
        if (!c.is_zero()) {
            if (!a.is_zero()) f1 += c * a;
            if (!b.is_zero()) f2 += c * b;
        }
        Poly next_a = b * xny;
        Poly next_b = a - spec.h() * b;
        a = std::move(next_a);
        b = std::move(next_b);
    }
    return RElem(spec, std::move(f1), std::move(f2));
}

RElem r_x_divide(const RElem& a, std::uint32_t m) {
    Poly q1(a.spec().field()), q2(a.spec().field());
    try {
        q1 = x_power_divide(a.f1(), m);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotDivisible, std::string("component f1: ") + e.what());
    }
    try {
        q2 = x_power_divide(a.f2(), m);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotDivisible, std::string("component f2 (coefficient of z): ") + e.what());
    }
    return RElem(a.spec(), std::move(q1), std::move(q2));
}

namespace {

class Evaluator {
public:
    Evaluator(const RBindings& images, const RingSpec& target) : target_(target) {
        for (const auto& [v, img] : images) {
            if (!img.spec().compatible(target))
                throw Error(ErrorCode::SpecMismatch, "image lives in " + img.spec().to_string());
            if (img == RElem::generator(target, v)) continue;
            powers_.emplace(v, std::vector<RElem>{RElem::constant(target, 1), img});
        }
        if (!target.is_free() && powers_.count(Var::z) == 0)
            powers_.emplace(Var::z, std::vector<RElem>{RElem::constant(target, 1), RElem::generator(target, Var::z)});
    }

    RElem eval(const Poly& p) {
        RElem out(target_);
        for (const auto& [m, c] : p.terms()) {
            Monomial kept = m;
            RElem acc = RElem::constant(target_, c);
            for (Var v : kAllVars) {
                const auto e = m[v];
                if (e == 0 || powers_.count(v) == 0) continue;
                kept[v] = 0;
                acc *= power(v, e);
            }
            out += acc.mul_monomial(kept);
        }
        return out;
    }

    RElem power(Var v, std::uint32_t e) {
        auto& cache = powers_.at(v);
        while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
        return cache[e];
    }

private:
    const RingSpec& target_;
    std::map<Var, std::vector<RElem>> powers_;
};

}  // namespace

RElem r_eval(const Poly& p, const RBindings& images, const RingSpec& target) {
    if (p.field() != target.field()) throw Error(ErrorCode::FieldMismatch, "target over another field");
    Evaluator ev(images, target);
    return ev.eval(p);
}

RElem r_apply(const RElem& a, const RBindings& images, const RingSpec& target) {
    return r_eval(a.to_poly(), images, target);
}

RElem PresentationReduction::transport(const Poly& p) const {
    const FieldSpec f = spec.field();
    Bindings b{{Var::y, Poly::var(f, Var::y) + y_shift * Poly::var(f, Var::z)}};
    return normal_form(spec, substitute(p, b));
}

PresentationReduction reduce_presentation(FieldSpec field, unsigned n, const Poly& h_raw) {
    if (n < 2) throw Error(ErrorCode::InvalidSpec, "n must be at least 2");
    if (h_raw.field() != field) throw Error(ErrorCode::FieldMismatch, "h is over another field");
    if (!only_x(h_raw)) throw Error(ErrorCode::InvalidSpec, "h must be a polynomial in x alone");
    if (h_raw.constant_term().is_zero()) throw Error(ErrorCode::InvalidSpec, "h(0) must be nonzero");

    Poly h = h_raw;
    Poly shift(field);
    unsigned steps = 0;
    while (*h.degree(Var::x) >= n) {
        const std::uint32_t d = *h.degree(Var::x);
        const Scalar lead = h.coefficient(Monomial::of(Var::x, d));
        shift += Poly::term(lead, Monomial::of(Var::x, d - n));
        h -= Poly::term(lead, Monomial::of(Var::x, d));
        ++steps;
    }
    return PresentationReduction{RingSpec::standard(field, n, h), std::move(shift), steps};
}

std::string to_string(const RElem& a) { return to_string(a.to_poly()); }

}  // namespace dsurf
