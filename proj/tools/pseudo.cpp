// pseudo: command-line front end for conformal-algebra cohomology.
//
// Exit codes: 0 pass, 1 usage/parse error, 2 mathematical counterexample,
// 3 internal inconsistency.

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pseudo/pseudo.hpp"

using json = nlohmann::ordered_json;
using namespace pseudo;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kCounterexample = 2;
constexpr int kInconsistent = 3;

struct InputFile {
    std::string role;
    std::string path;
    std::string text;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

/// Errors raised while reading a particular input are reported with its path.
class InputError : public Error {
public:
    using Error::Error;
};

template <class F>
auto parse_input(const InputFile& f, F&& parse) {
    try {
        return parse(f.text);
    } catch (const ParseError& e) {
        throw InputError(f.path + ": " + e.what());
    } catch (const ShapeError& e) {
        throw InputError(f.path + ": " + e.what());
    }
}

json residual_strings(const PolyVec& v, const std::vector<std::string>& names) {
    json arr = json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) arr.push_back("(" + v[k].to_string() + ")*" + names[k]);
    return arr;
}

json triple_json(const TripleFailure& t, const std::vector<std::string>& a, const std::vector<std::string>& b,
                 const std::vector<std::string>& c, const std::vector<std::string>& out) {
    return json{{"triple", json::array({a[t.i], b[t.j], c[t.k]})},
                {"lhs", to_string(t.lhs, out)},
                {"rhs", to_string(t.rhs, out)}};
}

/// Report shell with the stable top-level keys.
struct Report {
    json doc;
    int exit_code = kPass;

    explicit Report(const std::string& command) {
        doc["command"] = command;
        doc["inputs"] = json{{"digests", json::object()}};
        doc["truncation"] = json{{"deg", nullptr}, {"margin", nullptr}, {"stabilized", nullptr}};
        doc["results"] = json::object();
        doc["residuals"] = json::array();
        doc["version"] = pseudo::version;
    }

    void add_input(const InputFile& f) { doc["inputs"]["digests"][f.role] = sha256(f.text); }
};

void print_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
        }
    } else if (j.is_array()) {
        if (j.empty()) {
            os << prefix << ": []\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

struct Options {
    std::string algebra;
    std::string module;
    std::string quotient;
    std::string cocycle;
    int n = 1;
    int deg = 3;
    int margin = 1;
    bool deg_given = false;
    bool json_out = false;
    bool timing = false;
};

struct Loaded {
    ConformalAlgebra algebra;
    BimoduleStructure module;
};

Loaded load_algebra_and_module(const Options& o, Report& rep) {
    InputFile a{"algebra", o.algebra, read_file(o.algebra)};
    rep.add_input(a);
    Loaded l;
    l.algebra = parse_input(a, [](const std::string& t) { return parse_algebra(t); });
    if (o.module.empty()) {
        l.module = regular_bimodule(l.algebra);
    } else {
        InputFile m{"module", o.module, read_file(o.module)};
        rep.add_input(m);
        l.module = parse_input(m, [&](const std::string& t) { return parse_module(t, l.algebra); });
    }
    return l;
}

/// Associativity and module axioms; records a failure in the report.
bool precheck(const Loaded& l, Report& rep) {
    const auto& A = l.algebra;
    if (auto f = check_associativity(A)) {
        const auto& g = A.generator_names();
        rep.doc["results"]["failure"] = json{{"object", "algebra"}, {"axiom", "associativity"}};
        rep.doc["results"]["failure"].update(triple_json(*f, g, g, g, g));
        rep.doc["residuals"] = residual_strings(f->residual, g);
        return false;
    }
    if (auto f = check_module_axioms(A, l.module)) {
        const auto& g = A.generator_names();
        const auto& u = l.module.generator_names();
        json t;
        switch (f->axiom) {
        case ModuleAxiom::Left: t = triple_json(f->triple, g, g, u, u); break;
        case ModuleAxiom::Right: t = triple_json(f->triple, u, g, g, u); break;
        case ModuleAxiom::Bimodule: t = triple_json(f->triple, g, u, g, u); break;
        }
        rep.doc["results"]["failure"] = json{{"object", "module"}, {"axiom", to_string(f->axiom)}};
        rep.doc["results"]["failure"].update(t);
        rep.doc["residuals"] = residual_strings(f->triple.residual, u);
        return false;
    }
    return true;
}

json basis_strings(const SubspaceBasis& B, const CochainSlice& slice, const Loaded& l) {
    json arr = json::array();
    for (const auto& v : B.vectors()) {
        arr.push_back(describe_cochain(slice.from_coordinates(v), l.algebra.generator_names(),
                                       l.module.generator_names()));
    }
    return arr;
}

void cmd_check(const Options& o, Report& rep) {
    auto l = load_algebra_and_module(o, rep);
    const bool ok = precheck(l, rep);
    rep.doc["results"]["verdict"] = ok ? "pass" : "fail";
    rep.exit_code = ok ? kPass : kCounterexample;
}

void cmd_cohomology(const Options& o, Report& rep) {
    if (o.n < 0 || o.deg < 0 || o.margin < 1) throw CLI::ValidationError("need --n >= 0, --deg >= 0, --margin >= 1");
    auto l = load_algebra_and_module(o, rep);
    rep.doc["truncation"]["deg"] = o.deg;
    rep.doc["truncation"]["margin"] = o.margin;
    if (!precheck(l, rep)) {
        rep.doc["results"]["verdict"] = "fail";
        rep.exit_code = kCounterexample;
        return;
    }
    auto r = cohomology_dimensions(l.algebra, l.module, o.n, {o.deg, o.margin});
    rep.doc["truncation"]["stabilized"] = r.stabilized;
    json& res = rep.doc["results"];
    res["verdict"] = "pass";
    res["n"] = o.n;
    res["dims"] = json{{"cochains", r.dim_cochains}, {"Z", r.dim_Z}, {"B", r.dim_B}, {"H", r.dim_H}};
    res["margin_steps"] = r.margin_steps;
    if (o.n == 0) {
        const CochainSlice slice(l.algebra.rank(), l.module.rank(), 0, o.deg);
        json reps = json::array();
        for (const auto& v : r.Z.vectors()) {
            if (!satisfies_h0_condition(l.algebra, l.module, v)) {
                throw InconsistencyError("H0 representative fails a_{-del}u = u_0 a");
            }
            reps.push_back(describe_cochain(slice.from_coordinates(v), l.algebra.generator_names(),
                                            l.module.generator_names()));
        }
        res["basis"] = reps;
    }
}

void cmd_derivations(const Options& o, Report& rep) {
    if (o.deg < 0) throw CLI::ValidationError("need --deg >= 0");
    auto l = load_algebra_and_module(o, rep);
    rep.doc["truncation"]["deg"] = o.deg;
    if (!precheck(l, rep)) {
        rep.doc["results"]["verdict"] = "fail";
        rep.exit_code = kCounterexample;
        return;
    }
    rep.doc["truncation"]["stabilized"] = true;
    const CochainSlice slice(l.algebra.rank(), l.module.rank(), 1, o.deg);
    auto der = derivation_basis(l.algebra, l.module, o.deg);
    auto inner = inner_derivation_basis(l.algebra, l.module, o.deg);
    if (!der.contains(inner)) throw InconsistencyError("inner derivations are not derivations");
    json& res = rep.doc["results"];
    res["verdict"] = "pass";
    res["dims"] = json{{"derivations", der.dimension()},
                       {"inner", inner.dimension()},
                       {"outer", quotient_dimension(der, inner)}};
    res["basis"] = basis_strings(der, slice, l);
    res["inner_basis"] = basis_strings(inner, slice, l);
}

void cmd_deform(const Options& o, Report& rep) {
    if (o.cocycle.empty()) throw CLI::ValidationError("deform needs --cocycle FILE");
    Options plain = o;
    plain.module.clear();
    auto l = load_algebra_and_module(plain, rep);
    InputFile c{"cocycle", o.cocycle, read_file(o.cocycle)};
    rep.add_input(c);
    auto f = parse_input(c, [&](const std::string& t) { return parse_cochain(t, l.algebra, l.module); });
    if (f.degree != 2) throw InputError(o.cocycle + ": deformation cocycles have degree 2");
    if (!precheck(l, rep)) {
        rep.doc["results"]["verdict"] = "fail";
        rep.exit_code = kCounterexample;
        return;
    }
    auto r = deform(DeformationDatum{l.algebra, f});
    json& res = rep.doc["results"];
    res["verdict"] = r.first_order_associative ? "pass" : "fail";
    res["cocycle"] = r.cocycle;
    const auto& g = l.algebra.generator_names();
    if (r.failure) {
        res["failure"] = triple_json(*r.failure, g, g, g, g);
        rep.doc["residuals"] = residual_strings(r.failure->residual, g);
    }
    if (o.deg_given && r.first_order_associative) {
        rep.doc["truncation"]["deg"] = o.deg;
        auto zero = Cochain::zero(2, l.algebra.rank(), l.algebra.rank());
        auto w = find_deformation_witness(l.algebra, f, zero, o.deg);
        res["trivial_within_deg"] = w.has_value();
        res["witness"] = w ? json(describe_cochain(*w, g, g)) : json(nullptr);
    }
    rep.exit_code = r.first_order_associative ? kPass : kCounterexample;
}

void cmd_extend(const Options& o, Report& rep) {
    if (o.cocycle.empty()) throw CLI::ValidationError("extend needs --cocycle FILE");
    auto l = load_algebra_and_module(o, rep);
    InputFile c{"cocycle", o.cocycle, read_file(o.cocycle)};
    json& res = rep.doc["results"];
    const auto& g = l.algebra.generator_names();
    if (auto f = check_associativity(l.algebra)) {
        rep.add_input(c);
        res["failure"] = json{{"object", "algebra"}, {"axiom", "associativity"}};
        res["failure"].update(triple_json(*f, g, g, g, g));
        rep.doc["residuals"] = residual_strings(f->residual, g);
        res["verdict"] = "fail";
        rep.exit_code = kCounterexample;
        return;
    }
    if (is_gamma_file(c.text)) {
        BimoduleStructure N = l.module;
        if (!o.quotient.empty()) {
            InputFile q{"quotient", o.quotient, read_file(o.quotient)};
            rep.add_input(q);
            N = parse_input(q, [&](const std::string& t) { return parse_module(t, l.algebra); });
        }
        rep.add_input(c);
        auto gamma = parse_input(c, [&](const std::string& t) { return parse_gamma(t, l.algebra, l.module, N); });
        ExtensionDatum d{l.algebra, l.module, N, gamma};
        auto r = build_extension(d);
        res["kind"] = "module";
        res["verdict"] = r.is_module() ? "pass" : "fail";
        res["cocycle"] = r.cocycle;
        if (r.failure) {
            const auto& u = r.module.generator_names();
            res["failure"] = json{{"axiom", to_string(r.failure->axiom)}};
            res["failure"].update(triple_json(r.failure->triple, g, g, u, u));
            rep.doc["residuals"] = residual_strings(r.failure->triple.residual, u);
        }
        if (o.deg_given && r.is_module()) {
            rep.doc["truncation"]["deg"] = o.deg;
            auto w = find_extension_witness(l.algebra, l.module, N, gamma,
                                            zero_gamma(l.algebra.rank(), l.module.rank(), N.rank()), o.deg);
            res["split_within_deg"] = w.has_value();
            if (w) {
                // Names as in E = M ⊕ N, where clashing quotient names are primed.
                const auto& e = r.module.generator_names();
                json entries = json::array();
                for (std::size_t j = 0; j < w->source_rank; ++j)
                    for (std::size_t k = 0; k < w->target_rank; ++k)
                        if (!w->at(j, k).is_zero())
                            entries.push_back(e[w->target_rank + j] + " -> (" + w->at(j, k).to_string() + ") * " + e[k]);
                res["witness"] = entries;
            } else {
                res["witness"] = nullptr;
            }
        }
        rep.exit_code = r.is_module() ? kPass : kCounterexample;
        return;
    }
    rep.add_input(c);
    auto phi = parse_input(c, [&](const std::string& t) { return parse_cochain(t, l.algebra, l.module); });
    if (phi.degree != 2) throw InputError(o.cocycle + ": abelian extensions take a degree-2 cochain");
    auto r = build_abelian_extension(AbelianExtensionDatum{l.algebra, l.module, phi});
    res["kind"] = "abelian";
    res["verdict"] = r.is_associative() ? "pass" : "fail";
    res["cocycle"] = r.cocycle;
    res["rank"] = r.algebra.rank();
    if (r.failure) {
        const auto& e = r.algebra.generator_names();
        res["failure"] = triple_json(*r.failure, e, e, e, e);
        rep.doc["residuals"] = residual_strings(r.failure->residual, e);
    }
    rep.exit_code = r.is_associative() ? kPass : kCounterexample;
}

void cmd_classical(const Options& o, Report& rep) {
    InputFile a{"algebra", o.algebra, read_file(o.algebra)};
    rep.add_input(a);
    auto A = parse_input(a, [](const std::string& t) { return parse_fd_algebra(t); });
    FDBimodule M = regular_fd_bimodule(A);
    if (!o.module.empty()) {
        InputFile m{"module", o.module, read_file(o.module)};
        rep.add_input(m);
        M = parse_input(m, [&](const std::string& t) { return parse_fd_bimodule(t, A); });
    }
    json& res = rep.doc["results"];
    res["n"] = o.n;
    res["dim_HH"] = hochschild_dim(A, M, o.n);
    if (o.module.empty()) res["center_dim"] = center_dim(A);
    res["verdict"] = "pass";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of finite associative conformal algebras"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub, bool with_module) {
        sub->add_option("algebra", o.algebra, "definition file")->required();
        if (with_module) sub->add_option("--module", o.module, "bimodule definition (default: regular)");
        sub->add_flag("--json", o.json_out, "emit the JSON report");
        sub->add_flag("--timing", o.timing, "include wall-clock timing in the report");
    };
    auto* check = app.add_subcommand("check", "verify associativity and module axioms");
    common(check, true);
    auto* coh = app.add_subcommand("cohomology", "dimensions of Z^n, B^n, H^n on a degree slice");
    common(coh, true);
    coh->add_option("--n", o.n, "cochain degree")->default_val(1);
    coh->add_option("--deg", o.deg, "degree bound D")->default_val(3);
    coh->add_option("--margin", o.margin, "stabilization margin K")->default_val(1);
    auto* der = app.add_subcommand("derivations", "derivations and inner derivations on a degree slice");
    common(der, true);
    der->add_option("--deg", o.deg, "degree bound D")->default_val(3);
    auto* def = app.add_subcommand("deform", "first-order deformation from a 2-cochain");
    common(def, false);
    def->add_option("--cocycle", o.cocycle, "2-cochain file")->required();
    auto* deg_def = def->add_option("--deg", o.deg, "search a triviality witness up to this degree");
    auto* ext = app.add_subcommand("extend", "module extension (gamma file) or abelian extension (2-cochain)");
    common(ext, true);
    ext->add_option("--quotient", o.quotient, "quotient module N for module extensions (default: --module)");
    ext->add_option("--cocycle", o.cocycle, "cochain file")->required();
    auto* deg_ext = ext->add_option("--deg", o.deg, "search a splitting witness up to this degree");
    auto* cls = app.add_subcommand("classical", "Hochschild cohomology of a finite-dimensional algebra");
    common(cls, true);
    cls->add_option("--n", o.n, "cochain degree (0..3)")->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    o.deg_given = (deg_def->count() + deg_ext->count()) > 0;

    CLI::App* sub = app.get_subcommands().front();
    Report rep(sub->get_name());
    auto start = std::chrono::steady_clock::now();
    try {
        if (sub == check) cmd_check(o, rep);
        else if (sub == coh) cmd_cohomology(o, rep);
        else if (sub == der) cmd_derivations(o, rep);
        else if (sub == def) cmd_deform(o, rep);
        else if (sub == ext) cmd_extend(o, rep);
        else cmd_classical(o, rep);
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const AxiomError& e) {
        std::cerr << "axiom failure: " << e.what() << "\n";
        return kCounterexample;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (o.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rep.doc["timing_ms"] = ms;
    }
    if (o.json_out) {
        std::cout << rep.doc.dump(2) << "\n";
    } else {
        print_text(rep.doc, "", std::cout);
    }
    return rep.exit_code;
}
