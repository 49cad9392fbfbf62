#include "dsurf/cli.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsurf/cancellation.hpp"
#include "dsurf/grading.hpp"
#include "dsurf/io.hpp"
#include "dsurf/isoclass.hpp"

namespace dsurf {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
    int code = 0;
    std::string text;
    json result = json::object();
    Report checks;
};

struct Globals {
    std::string field = "Q";
    bool json_out = false;
    std::uint64_t seed = 0;
};

int exit_code_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::VerificationFailed:
    case ErrorCode::NotEndomorphism:
    case ErrorCode::NotOfLemmaForm:
    case ErrorCode::NotInvertible:
        return 1;
    default:
        return 2;
    }
}

std::string check_lines(const Report& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += c.name + ": " + (c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.detail.empty()) out += " (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

json images_json(const RBindings& images) {
    json j = json::object();
    for (const auto& [v, img] : images) j[std::string(1, var_name(v))] = to_string(img);
    return j;
}

std::string image_lines(const RBindings& images) {
    std::string out;
    for (const auto& [v, img] : images) out += std::string(1, var_name(v)) + " -> " + to_string(img) + "\n";
    return out;
}

json scalar_json(const std::optional<Scalar>& s) { return s ? json(s->to_string()) : json(nullptr); }

json verdict_json(const IsoVerdict& v) {
    json j;
    j["isomorphic"] = v.isomorphic;
    j["eta"] = scalar_json(v.eta);
    j["mu"] = scalar_json(v.mu);
    j["reason"] = to_string(v.reason);
    return j;
}

json triple_json(const Automorphism& a) {
    return json{{"mu", a.mu.to_string()}, {"sigma", a.sigma}, {"f", to_string(a.f)}};
}

std::string triple_line(const Automorphism& a) { return "triple: " + to_string(a) + "\n"; }

std::string degree_text(const std::optional<unsigned>& d) { return d ? std::to_string(*d) : "-inf"; }

std::string set_text(const std::vector<unsigned>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
    return out + "}";
}

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Exact computations on Danielewski surfaces x^n y = z^2 + h(x) z", "dsurf"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--field", g_.field, "field when a ring spec omits it: Q or F<p>");
        app.add_flag("--json", g_.json_out, "emit {command, inputs, result, checks}");
        app.add_option("--seed", g_.seed, "seed for randomized checks");

        add_commands(app);

        std::vector<const char*> argv{"dsurf"};
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? 0 : 2;
        }

        for (auto* sub : app.get_subcommands()) {
            const std::string name = sub->get_name();
            json inputs = json::object();
            inputs["field"] = g_.field;
            inputs["seed"] = g_.seed;
            for (const CLI::Option* opt : sub->get_options()) {
                if (opt->count() == 0 || opt->get_name() == "--help") continue;
                const std::string key = opt->get_single_name();
                const auto& res = opt->results();
                if (opt->get_expected_max() > 1)
                    inputs[key] = res;
                else if (opt->get_type_size() == 0)
                    inputs[key] = true;
                else
                    inputs[key] = res.empty() ? "" : res.back();
            }
            return finish(name, inputs, handlers_.at(name));
        }
        return 2;
    }

private:
    int finish(const std::string& name, const json& inputs, const std::function<Outcome()>& handler) {
        Outcome o;
        std::optional<Error> failure;
        try {
            o = handler();
        } catch (const Error& e) {
            failure = e;
        }
        if (g_.json_out) {
            json env;
            env["command"] = name;
            env["inputs"] = inputs;
            env["result"] = failure ? json(nullptr) : o.result;
            json checks = json::array();
            for (const auto& c : o.checks.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            env["checks"] = checks;
            if (failure) env["error"] = {{"code", to_string(failure->code())}, {"message", failure->what()}};
            out_ << env.dump(2) << "\n";
        } else if (failure) {
            err_ << "error: " << failure->what() << "\n";
        } else {
            out_ << o.text;
        }
        return failure ? exit_code_for(failure->code()) : o.code;
    }

    FieldSpec field() const { return FieldSpec::parse(g_.field); }
    RingSpec ring(const std::string& text) const { return parse_ring(text, field()); }

    CLI::App* command(CLI::App& app, const std::string& name, const std::string& help, std::function<Outcome()> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        handlers_[name] = std::move(fn);
        return sub;
    }

    void add_commands(CLI::App& app) {
        {
            auto* c = command(app, "normal-form", "reduce an expression to f1 + z*f2", [this] {
                const RingSpec spec = ring(o_.ring);
                const RElem nf = normal_form(spec, parse_poly(o_.expr, spec.field()));
                Outcome o;
                o.text = to_string(nf) + "\n";
                o.result = {{"normal_form", to_string(nf)}, {"f1", to_string(nf.f1())}, {"f2", to_string(nf.f2())}};
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--expr", o_.expr, "polynomial")->required();
        }
        {
            auto* c = command(app, "exp-build", "exponential map from theorem coefficients", [this] {
                const RingSpec spec = ring(o_.ring);
                const ExponentialMap phi = build_from_theorem(spec, parse_coeffs(o_.coeffs, spec.field()));
                Outcome o;
                o.checks = verify_exponential(spec, phi.images());
                o.text = image_lines(phi.images()) + check_lines(o.checks);
                o.result = {{"images", images_json(phi.images())}, {"nontrivial", phi.nontrivial()}};
                o.code = o.checks.passed() ? 0 : 1;
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--coeffs", o_.coeffs, "\"e: f_e(x); ...\"")->required();
        }
        {
            auto* c = command(app, "exp-verify", "check the exponential-map axioms", [this] {
                const RingSpec spec = ring(o_.ring);
                const RBindings images = parse_map(o_.map, spec);
                Outcome o;
                o.checks = verify_exponential(spec, images);
                if (o.checks.passed() && o_.samples > 0) {
                    const Report laws = check_derivation_laws(ExponentialMap::from_images(spec, images), o_.samples, g_.seed);
                    for (const auto& ch : laws.checks) o.checks.checks.push_back(ch);
                }
                const bool ok = o.checks.passed();
                o.text = check_lines(o.checks) + (ok ? "verified\n" : "not verified\n");
                o.result = {{"verified", ok}};
                o.code = ok ? 0 : 1;
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--map", o_.map, "\"x -> ...; y -> ...; z -> ...\"")->required();
            c->add_option("--samples", o_.samples, "random elements for the Leibniz/iterative checks");
        }
        {
            auto* c = command(app, "exp-degree", "phi-degree of an element", [this] {
                const RingSpec spec = ring(o_.ring);
                const ExponentialMap phi = ExponentialMap::from_images(spec, parse_map(o_.map, spec));
                const RElem a = normal_form(spec, parse_poly(o_.expr, spec.field()));
                const auto d = phi_degree(phi, a);
                const bool inv = is_invariant(phi, a);
                Outcome o;
                o.text = "deg_phi = " + degree_text(d) + "\ninvariant = " + (inv ? "true" : "false") + "\n";
                o.result = {{"degree", d ? json(*d) : json(nullptr)}, {"invariant", inv}};
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--map", o_.map, "exponential map")->required();
            c->add_option("--expr", o_.expr, "element")->required();
        }
        {
            auto* c = command(app, "derive", "higher derivations D^i", [this] {
                const RingSpec spec = ring(o_.ring);
                const ExponentialMap phi = ExponentialMap::from_images(spec, parse_map(o_.map, spec));
                const RElem a = normal_form(spec, parse_poly(o_.expr, spec.field()));
                Outcome o;
                if (o_.index >= 0) {
                    const RElem d = higher_derivation(phi, static_cast<unsigned>(o_.index), a);
                    o.text = to_string(d) + "\n";
                    o.result = {{"index", o_.index}, {"value", to_string(d)}};
                } else {
                    json all = json::array();
                    const auto ds = higher_derivations(phi, a);
                    for (std::size_t i = 0; i < ds.size(); ++i) {
                        o.text += "D^" + std::to_string(i) + ": " + to_string(ds[i]) + "\n";
                        all.push_back(to_string(ds[i]));
                    }
                    o.result = {{"derivations", all}};
                }
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--map", o_.map, "exponential map")->required();
            c->add_option("--expr", o_.expr, "element")->required();
            c->add_option("--index", o_.index, "i; all D^i when omitted")->check(CLI::Range(0, 64));
        }
        {
            auto* c = command(app, "homogenize", "homogenize phi under weights (repeat for stages)", [this] {
                const RingSpec spec = ring(o_.ring);
                if (o_.weights.size() != o_.targets.size() || o_.weights.empty())
                    throw Error(ErrorCode::InvalidArgument, "give one --target per --weights");
                const ExponentialMap phi = ExponentialMap::from_images(spec, parse_map(o_.map, spec));
                std::vector<Stage> stages;
                for (std::size_t i = 0; i < o_.weights.size(); ++i)
                    stages.push_back(Stage{parse_weights(o_.weights[i]), ring(o_.targets[i])});
                const IteratedHomogenization it = iterate_homogenize(phi, stages);
                Outcome o;
                json js = json::array();
                for (std::size_t k = 0; k < it.stages.size(); ++k) {
                    const HomogenizationResult& r = it.stages[k];
                    const std::string tag = "stage" + std::to_string(k + 1);
                    o.text += tag + ": grdeg(U) = " + r.grdeg_U.get_str() + " on " + r.target.to_string() + "\n";
                    json sets = json::object();
                    for (const auto& [g, s] : r.S_sets) {
                        o.text += std::string("  S(") + var_name(g) + ") = " + set_text(s) + "\n";
                        sets[std::string(1, var_name(g))] = s;
                    }
                    for (const auto& [g, img] : r.bar.images())
                        o.text += std::string("  ") + var_name(g) + " -> " + to_string(img) + "\n";
                    o.checks.add(tag + "_exponential", r.bar.verified());
                    o.checks.add(tag + "_containment", true, std::to_string(r.containment_samples) + " samples");
                    js.push_back({{"grdeg_U", r.grdeg_U.get_str()},
                                  {"target", r.target.to_string()},
                                  {"S", sets},
                                  {"images", images_json(r.bar.images())}});
                }
                o.text += check_lines(o.checks);
                o.result = {{"stages", js}};
                if (it.stages.size() > 1) {
                    o.text += std::string("top parts monomial: ") + (it.top_parts_monomial ? "true" : "false") + "\n";
                    o.result["top_parts_monomial"] = it.top_parts_monomial;
                }
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--map", o_.map, "exponential map")->required();
            c->add_option("--weights", o_.weights, "w{x:.., y:.., z:..}")->required();
            c->add_option("--target", o_.targets, "target ring spec")->required();
        }
        {
            auto* c = command(app, "aut-apply", "apply an automorphism word", [this] {
                const RingSpec spec = ring(o_.ring);
                const Automorphism a = parse_word(o_.word.at(0), spec);
                const RElem img = a.apply(normal_form(spec, parse_poly(o_.expr, spec.field())));
                Outcome o;
                o.text = to_string(img) + "\n";
                o.result = {{"image", to_string(img)}, {"triple", triple_json(a)}};
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--word", o_.word, "e.g. \"L(2) * T * E(x+1)\"")->required()->expected(1);
            c->add_option("--expr", o_.expr, "element")->required();
        }
        {
            auto* c = command(app, "aut-compose", "compose words (first given acts last)", [this] {
                const RingSpec spec = ring(o_.ring);
                Automorphism a = identity_automorphism(spec);
                for (const auto& w : o_.word) a = compose(a, parse_word(w, spec));
                Outcome o;
                o.text = triple_line(a) + image_lines(a.images());
                o.result = {{"triple", triple_json(a)}, {"images", images_json(a.images())}};
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--word", o_.word, "automorphism word (repeatable)")->required();
        }
        {
            auto* c = command(app, "aut-decompose", "write an automorphism as L(mu) * T^eps * E(f)", [this] {
                const RingSpec spec = ring(o_.ring);
                if (o_.word.empty() == o_.map.empty())
                    throw Error(ErrorCode::InvalidArgument, "give exactly one of --word or --map");
                const Automorphism a =
                    o_.word.empty() ? verify_candidate(spec, parse_map(o_.map, spec)) : parse_word(o_.word.at(0), spec);
                const Word w = decompose(a);
                Outcome o;
                o.checks.add("recompose", recompose(spec, w) == a);
                o.text = to_string(w) + "\n" + triple_line(a) + check_lines(o.checks);
                o.result = {{"word", to_string(w)},
                            {"mu", w.mu.to_string()},
                            {"eps", w.eps},
                            {"f", to_string(w.f)},
                            {"triple", triple_json(a)}};
                o.code = o.checks.passed() ? 0 : 1;
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
            c->add_option("--word", o_.word, "automorphism word")->expected(1);
            c->add_option("--map", o_.map, "candidate images \"x -> ...; y -> ...; z -> ...\"");
        }
        {
            auto* c = command(app, "aut-structure", "Aut(R) = N x| H data", [this] {
                const GroupStructure g = group_structure(ring(o_.ring));
                Outcome o;
                std::string elems;
                json je = json::array();
                for (const Scalar& s : g.l_elements) {
                    elems += (elems.empty() ? "" : ", ") + s.to_string();
                    je.push_back(s.to_string());
                }
                o.text = "m = " + std::to_string(g.m) + "\nL = " + g.L_description +
                         (g.l_elements.empty() ? "" : " {" + elems + "}") + "\nH = " + g.H_description +
                         "\nN = " + g.N_description + "\n";
                o.result = {{"m", g.m},
                            {"L", g.L_description},
                            {"L_order", g.l_kind == LKind::full ? json(nullptr) : json(g.l_order)},
                            {"L_elements", je},
                            {"H", g.H_description},
                            {"N", g.N_description}};
                return o;
            });
            c->add_option("--ring", o_.ring, "ring spec")->required();
        }
        {
            auto* c = command(app, "iso-check", "decide R1 = R2", [this] {
                const RingSpec l = ring(o_.left), r = ring(o_.right);
                const IsoVerdict v = o_.oracle ? iso_oracle_enumerate(l, r) : classify(l, r);
                Outcome o;
                o.result = verdict_json(v);
                o.text = o.result.dump() + "\n";
                if (v.isomorphic) {
                    const IsoWitness w = witness(l, r, v);
                    o.checks.add("witness", true);
                    if (o_.show_witness)
                        o.text += "forward: " + to_string(w.forward) + "\nbackward: " + to_string(w.backward) + "\n";
                    o.result["witness"] = {{"forward", images_json(w.forward)}, {"backward", images_json(w.backward)}};
                }
                return o;
            });
            c->add_option("--left", o_.left, "ring spec")->required();
            c->add_option("--right", o_.right, "ring spec")->required();
            c->add_flag("--oracle", o_.oracle, "exhaustive search over F_p");
            c->add_flag("--witness", o_.show_witness, "print the isomorphism");
        }
        {
            auto* c = command(app, "cancel-verify", "verify the cylinder construction for (n1, n2)", [this] {
                const FieldSpec f = field();
                const unsigned n1 = o_.n1, n2 = o_.n2;
                if (!(2 <= n1 && n1 < n2 && n2 <= 2 * n1))
                    throw Error(ErrorCode::IllegalParameters, "need 2 <= n1 < n2 <= 2 n1");
                Outcome o;
                try {
                    const CancellationWitness w = build_cancellation(f, n1, n2);
                    o.checks = verify_cancellation(w);
                    o.result = {{"s", to_string(w.s)}, {"phi", images_json(w.phi.images())}};
                    o.text = check_lines(o.checks) + "s = " + to_string(w.s) + "\n";
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::VerificationFailed) throw;
                    o.checks.add("build", false, e.what());
                    o.text = check_lines(o.checks);
                }
                o.code = o.checks.passed() ? 0 : 1;
                return o;
            });
            c->add_option("--n1", o_.n1, "n1")->required();
            c->add_option("--n2", o_.n2, "n2")->required();
        }
    }

    struct Options {
        std::string ring, expr, coeffs, map, left, right;
        std::vector<std::string> weights, targets, word;
        unsigned samples = 0;
        int index = -1;
        unsigned n1 = 0, n2 = 0;
        bool oracle = false, show_witness = false;
    };

    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    Options o_;
    std::map<std::string, std::function<Outcome()>> handlers_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Cli(out, err).run(args);
}

}  // namespace dsurf
