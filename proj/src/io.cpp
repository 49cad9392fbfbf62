#include "dsurf/io.hpp"

#include <cctype>
#include <vector>

namespace dsurf {

namespace {

constexpr std::uint32_t kMaxExponent = 1000000;

class PolyParser {
public:
    PolyParser(std::string_view text, const FieldSpec& field) : s_(text), f_(field) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw SyntaxError(pos_, "expected exponent");
            std::uint64_t e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
                if (e > kMaxExponent) throw SyntaxError(start, "exponent exceeds 10^6");
                ++pos_;
            }
            b = b.pow(static_cast<std::uint32_t>(e));
        }
        return b;
    }

    std::string digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    Poly base() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string num = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                const std::size_t slash = pos_++;
                const std::string den = digits();
                if (den.empty()) throw SyntaxError(slash + 1, "expected denominator");
                return Poly::constant(Scalar(f_, mpz_class(num), mpz_class(den)));
            }
            return Poly::constant(Scalar(f_, mpz_class(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const auto v = var_from_char(c);
            if (!v) throw SyntaxError(pos_, std::string("unknown variable '") + c + "'");
            ++pos_;
            return Poly::var(f_, *v);
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    FieldSpec f_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// Splits at `sep` outside parentheses.
std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

mpq_class parse_rational(const std::string& t) {
    try {
        mpq_class q(t);
        if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + t + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + t + "'");
    }
}

}  // namespace

Poly parse_poly(std::string_view text, const FieldSpec& field) { return PolyParser(text, field).parse(); }

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
    const Poly p = parse_poly(text, field);
    if (!p.is_constant()) throw Error(ErrorCode::InvalidArgument, "expected a scalar, got '" + std::string(text) + "'");
    return p.constant_term();
}

RingSpec parse_ring(std::string_view text, std::optional<FieldSpec> fallback) {
    std::string s = trim(text);
    bool with_T = false;
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, "[T]") == 0) {
        with_T = true;
        s = trim(std::string_view(s).substr(0, s.size() - 3));
    }
    if (s.size() < 3 || s.compare(0, 2, "R(") != 0 || s.back() != ')')
        throw Error(ErrorCode::InvalidSpec, "ring spec must look like R(n=..., h=..., field=...): '" + std::string(text) + "'");
    const auto parts = split_top(std::string_view(s).substr(2, s.size() - 3), ',');

    std::optional<unsigned> n;
    std::optional<std::string> h_text;
    std::optional<FieldSpec> field;
    bool graded = false, free = false;
    for (const std::string& part : parts) {
        if (part == "graded") {
            graded = true;
            continue;
        }
        if (part == "free") {
            free = true;
            continue;
        }
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidSpec, "unexpected '" + part + "' in ring spec");
        const std::string key = trim(std::string_view(part).substr(0, eq));
        const std::string value = trim(std::string_view(part).substr(eq + 1));
        if (key == "n") {
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9)
                throw Error(ErrorCode::InvalidSpec, "n must be a natural number, got '" + value + "'");
            n = static_cast<unsigned>(std::stoul(value));
        } else if (key == "h") {
            h_text = value;
        } else if (key == "field") {
            field = FieldSpec::parse(value);
        } else {
            throw Error(ErrorCode::InvalidSpec, "unknown key '" + key + "' in ring spec");
        }
    }
    if (!field) field = fallback;
    if (!field) throw Error(ErrorCode::InvalidSpec, "ring spec has no field and no --field was given");
    if (graded && free) throw Error(ErrorCode::InvalidSpec, "a ring cannot be both graded and free");

    RingSpec spec = RingSpec::free(*field);
    if (free) {
        if (n || h_text) throw Error(ErrorCode::InvalidSpec, "free rings take no n or h");
    } else {
        if (!n) throw Error(ErrorCode::InvalidSpec, "ring spec needs n");
        if (graded) {
            if (h_text && !parse_poly(*h_text, *field).is_zero())
                throw Error(ErrorCode::InvalidSpec, "graded rings have h = 0");
            spec = RingSpec::graded(*field, *n);
        } else {
            if (!h_text) throw Error(ErrorCode::InvalidSpec, "ring spec needs h");
            spec = RingSpec::standard(*field, *n, parse_poly(*h_text, *field));
        }
    }
    return with_T ? spec.with_T() : spec;
}

WeightVector parse_weights(std::string_view text) {
    const std::string s = trim(text);
    if (s.size() < 3 || s.compare(0, 2, "w{") != 0 || s.back() != '}')
        throw Error(ErrorCode::InvalidArgument, "weights must look like w{x:0, y:2, z:1}");
    WeightVector w;
    const std::string body = trim(std::string_view(s).substr(2, s.size() - 3));
    if (body.empty()) return w;
    for (const std::string& part : split_top(body, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected var:value, got '" + part + "'");
        const std::string name = trim(std::string_view(part).substr(0, colon));
        const auto v = name.size() == 1 ? var_from_char(name[0]) : std::nullopt;
        if (!v) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + name + "' in weights");
        if (w.defined(*v)) throw Error(ErrorCode::InvalidArgument, "weight for " + name + " given twice");
        w.set(*v, parse_rational(trim(std::string_view(part).substr(colon + 1))));
    }
    return w;
}

std::string to_string(const WeightVector& w) {
    std::string out = "w{";
    bool first = true;
    for (const auto& [v, q] : w.entries()) {
        if (!first) out += ", ";
        first = false;
        out += var_name(v);
        out += ":" + q.get_str();
    }
    return out + "}";
}

RBindings parse_map(std::string_view text, const RingSpec& spec) {
    RBindings out;
    for (const std::string& part : split_top(text, ';')) {
        if (part.empty()) continue;
        const auto arrow = part.find("->");
        if (arrow == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected 'var -> expr', got '" + part + "'");
        const std::string name = trim(std::string_view(part).substr(0, arrow));
        const auto v = name.size() == 1 ? var_from_char(name[0]) : std::nullopt;
        if (!v) throw Error(ErrorCode::InvalidArgument, "unknown generator '" + name + "' in map");
        if (out.count(*v)) throw Error(ErrorCode::InvalidArgument, "image of " + name + " given twice");
        out.emplace(*v, normal_form(spec, parse_poly(std::string_view(part).substr(arrow + 2), spec.field())));
    }
    return out;
}

std::string to_string(const RBindings& images) {
    std::string out;
    for (const auto& [v, img] : images) {
        if (!out.empty()) out += "; ";
        out += var_name(v);
        out += " -> " + to_string(img);
    }
    return out;
}

Automorphism parse_word(std::string_view text, const RingSpec& spec) {
    Automorphism acc = identity_automorphism(spec);
    for (const std::string& factor : split_top(text, '*')) {
        Automorphism g = acc;
        if (factor == "T") {
            g = make_generator(spec, GenT{});
        } else if (factor == "id") {
            g = identity_automorphism(spec);
        } else if (factor.size() >= 3 && (factor[0] == 'E' || factor[0] == 'L') && factor.back() == ')') {
            std::string_view rest = std::string_view(factor).substr(1);
            const std::string inner_outer = trim(rest);
            if (inner_outer.front() != '(') throw Error(ErrorCode::InvalidArgument, "bad word factor '" + factor + "'");
            const std::string inner = inner_outer.substr(1, inner_outer.size() - 2);
            if (factor[0] == 'E')
                g = make_generator(spec, GenEf{parse_poly(inner, spec.field())});
            else
                g = make_generator(spec, GenL{parse_scalar(inner, spec.field())});
        } else {
            throw Error(ErrorCode::InvalidArgument, "bad word factor '" + factor + "' (expected L(mu), T, E(f) or id)");
        }
        acc = compose(acc, g);
    }
    return acc;
}

std::string to_string(const Word& w) {
    std::string out = "L(" + w.mu.to_string() + ")";
    if (w.eps) out += " * T";
    return out + " * E(" + to_string(w.f) + ")";
}

TheoremCoefficients parse_coeffs(std::string_view text, const FieldSpec& field) {
    TheoremCoefficients out;
    for (const std::string& part : split_top(text, ';')) {
        if (part.empty()) continue;
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected 'e: f', got '" + part + "'");
        const std::string e = trim(std::string_view(part).substr(0, colon));
        if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos || e.size() > 9)
            throw Error(ErrorCode::InvalidArgument, "exponent must be a natural number, got '" + e + "'");
        out.emplace_back(static_cast<unsigned>(std::stoul(e)), parse_poly(std::string_view(part).substr(colon + 1), field));
    }
    return out;
}

}  // namespace dsurf
