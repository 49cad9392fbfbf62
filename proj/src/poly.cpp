#include "dsurf/poly.hpp"

#include <algorithm>
#include <vector>

namespace dsurf {

char var_name(Var v) {
    static constexpr char names[kNumVars] = {'x', 'y', 'z', 'T', 'U', 'S'};
    return names[static_cast<std::size_t>(v)];
}

std::optional<Var> var_from_char(char c) {
    switch (c) {
    case 'x': case 'X': return Var::x;
    case 'y': case 'Y': return Var::y;
    case 'z': case 'Z': return Var::z;
    case 'T': return Var::T;
    case 'U': return Var::U;
    case 'S': return Var::S;
    default: return std::nullopt;
    }
}

Monomial Monomial::of(std::initializer_list<std::pair<Var, std::uint32_t>> powers) {
    Monomial m;
    for (auto [v, e] : powers) m[v] += e;
    return m;
}

std::uint64_t Monomial::total() const {
    std::uint64_t t = 0;
    for (auto e : exp) t += e;
    return t;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    static constexpr Var priority[kNumVars] = {Var::z, Var::y, Var::x, Var::T, Var::U, Var::S};
    for (Var v : priority)
        if (a[v] != b[v]) return a[v] > b[v];
    return false;
}

WeightVector::WeightVector(std::initializer_list<std::pair<Var, mpq_class>> w) {
    for (const auto& [v, q] : w) weights_[v] = q;
}

const mpq_class& WeightVector::at(Var v) const {
    auto it = weights_.find(v);
    if (it == weights_.end())
        throw Error(ErrorCode::InvalidArgument, std::string("no weight for variable ") + var_name(v));
    return it->second;
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::var(FieldSpec f, Var v, std::uint32_t e) {
    return term(Scalar::one(f), Monomial::of(v, e));
}

Poly Poly::term(const Scalar& c, const Monomial& m) {
    Poly p(c.field());
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

bool Poly::contains(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] > 0; });
}

std::optional<std::uint32_t> Poly::degree(Var v) const {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

std::uint64_t Poly::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total();
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.field() != field_)
        throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + c.field().to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same(const Poly& o) const {
    if (field_ != o.field_)
        throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "scalar from another field");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly result = constant(Scalar::one(field_));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::mul_monomial(const Monomial& m) const {
    Poly r(field_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
    return r;
}

Poly substitute(const Poly& p, const Bindings& bindings) {
    for (const auto& [v, img] : bindings)
        if (img.field() != p.field()) throw Error(ErrorCode::FieldMismatch, "binding from another field");

    // Cached powers for every bound variable that is not the identity.
    std::map<Var, std::vector<Poly>> powers;
    for (const auto& [v, img] : bindings)
        if (!(img == Poly::var(p.field(), v))) powers[v] = {Poly::constant(p.field(), 1)};

    Poly out(p.field());
    for (const auto& [m, c] : p.terms()) {
        Monomial kept = m;
        Poly acc = Poly::constant(c);
        for (auto& [v, cache] : powers) {
            const auto e = m[v];
            if (e == 0) continue;
            kept[v] = 0;
            while (cache.size() <= e) cache.push_back(cache.back() * bindings.at(v));
            acc *= cache[e];
        }
        out += acc.mul_monomial(kept);
    }
    return out;
}

Poly coeff_of(const Poly& p, Var v, std::uint32_t k) {
    Poly out(p.field());
    for (const auto& [m, c] : p.terms()) {
        if (m[v] != k) continue;
        Monomial rest = m;
        rest[v] = 0;
        out.add_term(rest, c);
    }
    return out;
}

namespace {

mpq_class monomial_weight(const Monomial& m, const WeightVector& w) {
    mpq_class total = 0;
    for (Var v : kAllVars)
        if (m[v] != 0) total += w.at(v) * m[v];
    return total;
}

}  // namespace

std::optional<mpq_class> weighted_degree(const Poly& p, const WeightVector& w) {
    std::optional<mpq_class> best;
    for (const auto& [m, c] : p.terms()) {
        mpq_class d = monomial_weight(m, w);
        if (!best || d > *best) best = d;
    }
    return best;
}

Poly top_part(const Poly& p, const WeightVector& w) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "top part of the zero polynomial");
    const mpq_class top = *weighted_degree(p, w);
    Poly out(p.field());
    for (const auto& [m, c] : p.terms())
        if (monomial_weight(m, w) == top) out.add_term(m, c);
    return out;
}

Poly x_power_divide(const Poly& p, std::uint32_t m) {
    Poly out(p.field());
    for (const auto& [mono, c] : p.terms()) {
        if (mono[Var::x] < m)
            throw Error(ErrorCode::NotDivisible,
                        "term " + to_string(Poly::term(c, mono)) + " is not divisible by x^" + std::to_string(m));
        Monomial q = mono;
        q[Var::x] -= m;
        out.add_term(q, c);
    }
    return out;
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (Var v : kAllVars) {
        const auto e = m[v];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += var_name(v);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool negative = false;
        std::string mag;
        if (p.field().is_rational()) {
            const mpq_class& q = c.rational();
            negative = sgn(q) < 0;
            mag = mpq_class(abs(q)).get_str();
        } else {
            mag = c.to_string();
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += mag;
        else if (mag == "1")
            out += to_string(m);
        else
            out += mag + "*" + to_string(m);
    }
    return out;
}

}  // namespace dsurf
