#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>

#include "rigidwitt/bounds.hpp"
#include "rigidwitt/errors.hpp"
#include "rigidwitt/pfnum.hpp"
#include "rigidwitt/sampling.hpp"
#include "rigidwitt/suites.hpp"
#include "rigidwitt/syntax.hpp"

namespace rigidwitt::cli {

namespace {

using nlohmann::json;

json with_schema(json body) {
    body["schema"] = 1;
    return body;
}

std::string join(const std::vector<SquareClass>& classes) {
    std::string out;
    for (const auto& c : classes) out += (out.empty() ? "" : ",") + to_string(c);
    return out;
}

json classes_json(const std::vector<SquareClass>& classes) {
    json out = json::array();
    for (const auto& c : classes) out.push_back(to_string(c));
    return out;
}

// Membership ladder: the largest n <= 2 + log2(dim) with phi in I^n.
std::vector<bool> ladder(const DiagonalForm& phi) {
    std::vector<bool> out;
    int top = 2;
    for (std::size_t d = phi.dim(); d > 1; d /= 2) ++top;
    for (int n = 1; n <= top; ++n) out.push_back(in_In(phi, n));
    return out;
}

struct Inputs {
    std::string field;
    std::string form;
    bool json = false;

    DiagonalForm parse() const { return parse_form(form, parse_field(field)); }
};

void add_inputs(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--field", in.field, "field model, e.g. F3[t1,t2]")->required();
    cmd->add_option("--form", in.form, "form literal, e.g. <1,t1,-t2>")->required();
    cmd->add_flag("--json", in.json, "JSON output");
}

int analyze(const Inputs& in, std::ostream& out) {
    const DiagonalForm phi = in.parse();
    const DiagonalForm an = anisotropic_part(phi);
    const auto values = value_set(phi);
    const auto steps = ladder(phi);
    if (in.json) {
        json j{{"field", to_string(phi.field())}, {"form", to_string(phi)}, {"dim", phi.dim()},
               {"anisotropic_part", to_string(an)}, {"witt_index", witt_index(phi)},
               {"hyperbolic", an.empty()}, {"value_set", classes_json(values)},
               {"determinant", to_string(determinant(phi))}, {"discriminant", to_string(discriminant(phi))}};
        json l = json::array();
        for (bool b : steps) l.push_back(b);
        j["in_I"] = l;
        out << with_schema(j).dump(2) << "\n";
        return ok;
    }
    out << "field: " << to_string(phi.field()) << "\n";
    out << "form: " << to_string(phi) << "\n";
    out << "dim: " << phi.dim() << "\n";
    out << "anisotropic part: " << to_string(an) << "\n";
    out << "witt index: " << witt_index(phi) << "\n";
    out << "hyperbolic: " << (an.empty() ? "yes" : "no") << "\n";
    out << "value set: {" << join(values) << "}\n";
    for (std::size_t n = 0; n < steps.size(); ++n) {
        out << "in I^" << n + 1 << ": " << (steps[n] ? "yes" : "no") << "\n";
    }
    out << "determinant: " << to_string(determinant(phi)) << "\n";
    out << "discriminant: " << to_string(discriminant(phi)) << "\n";
    return ok;
}

json certificate_body(const PfisterCertificate& cert) { return json::parse(certificate_json(cert)); }

void print_certificate(const PfisterCertificate& cert, std::ostream& out) {
    out << "certificate (" << cert.length() << " terms, "
        << (cert.verify() ? "verified" : "NOT VERIFIED") << "):\n";
    for (const auto& t : cert.terms) out << "  " << to_string(t) << "\n";
}

int pfister_number_cmd(const Inputs& in, int n, bool unscaled, std::optional<int> cap, int threads,
                       std::ostream& out) {
    const DiagonalForm phi = in.parse();
    SearchOptions opts;
    opts.depth_cap = cap;
    opts.threads = threads;
    const PfisterNumberResult gp = pfister_number(phi, n, opts);
    std::optional<PfisterNumberResult> p;
    if (unscaled) {
        SearchOptions u = opts;
        u.unscaled = true;
        p = pfister_number(phi, n, u);
    }
    if (in.json) {
        json j{{"field", to_string(phi.field())}, {"form", to_string(phi)}, {"n", n}, {"GP", gp.value},
               {"certificate", certificate_body(gp.certificate)}, {"nodes", gp.stats.nodes}};
        if (p) {
            j["P"] = p->value;
            j["unscaled_certificate"] = certificate_body(p->certificate);
        }
        out << with_schema(j).dump(2) << "\n";
        return ok;
    }
    out << gp.value << "\n";
    print_certificate(gp.certificate, out);
    if (p) {
        out << "P_" << n << ": " << p->value << "\n";
        print_certificate(p->certificate, out);
    }
    return ok;
}

int classify_cmd(const Inputs& in, int dim, std::ostream& out) {
    const DiagonalForm phi = in.parse();
    if (static_cast<int>(anisotropic_part(phi).dim()) != dim || phi.dim() != anisotropic_part(phi).dim()) {
        throw PreconditionError("classify: form must be anisotropic of dimension " + std::to_string(dim));
    }
    if (dim == 14) {
        const Report14 r = classify14(phi);
        if (in.json) {
            json j{{"dim", 14}, {"gp3", r.gp3}, {"certificate", certificate_body(r.certificate)},
                   {"condition_i", r.condition_i}, {"condition_ii", r.condition_ii},
                   {"condition_iii", r.condition_iii}, {"flagged", r.flagged}};
            if (r.gp2_subform) j["gp2_subform"] = to_string(r.gp2_subform->witness);
            if (r.shape_scalar) j["shape_scalar"] = to_string(*r.shape_scalar);
            out << with_schema(j).dump(2) << "\n";
            return ok;
        }
        out << "GP_3: " << r.gp3 << "\n";
        print_certificate(r.certificate, out);
        out << "(i) two scaled 3-fold Pfister forms: " << (r.condition_i ? "yes" : "no") << "\n";
        out << "(ii) s(tau1' - tau2') shape: " << (r.condition_ii ? "yes" : "no")
            << (r.flagged ? " (flagged)" : "") << "\n";
        if (r.shape_scalar) out << "    s = " << to_string(*r.shape_scalar) << "\n";
        out << "(iii) GP_2 subform: "
            << (r.gp2_subform ? to_string(r.gp2_subform->witness) : std::string("none")) << "\n";
        return ok;
    }
    if (dim == 16) {
        const Report16 r = classify16(phi);
        json terms = json::array();
        for (const auto& t : r.gp2_decomposition) terms.push_back(to_string(t));
        if (in.json) {
            json j{{"dim", 16}, {"gp3", r.gp3}, {"certificate", certificate_body(r.certificate)},
                   {"gp2_subform", to_string(r.gp2_subform.witness)}, {"gp2_decomposition", terms},
                   {"splitting", {to_string(r.splitting.a), to_string(r.splitting.b)}}};
            out << with_schema(j).dump(2) << "\n";
            return ok;
        }
        out << "GP_3: " << r.gp3 << "\n";
        print_certificate(r.certificate, out);
        out << "GP_2 subform: " << to_string(r.gp2_subform.witness) << "\n";
        out << "GP_2 decomposition:";
        for (const auto& t : r.gp2_decomposition) out << " " << to_string(t);
        out << "\nsplit by sqrt(" << to_string(r.splitting.a) << "), sqrt(" << to_string(r.splitting.b) << ")\n";
        return ok;
    }
    throw PreconditionError("classify: --dim must be 14 or 16");
}

int decompose_cmd(const Inputs& in, const std::string& at, std::ostream& out) {
    const DiagonalForm phi = in.parse();
    const SquareClass a = parse_class(at, phi.field());
    const UnimodularSplit s = rigid_decompose(phi, a);
    if (in.json) {
        json j{{"t", to_string(s.t)}, {"sigma", to_string(s.sigma)}, {"tau", to_string(s.tau)}};
        out << with_schema(j).dump(2) << "\n";
        return ok;
    }
    out << "t: " << to_string(s.t) << "\n";
    out << "sigma: " << to_string(s.sigma) << "\n";
    out << "tau: " << to_string(s.tau) << "\n";
    return ok;
}

int bounds_cmd(int n, int dmax, std::ostream& out) {
    if (n < 1 || dmax < 0) throw PreconditionError("bounds: need n >= 1 and dmax >= 0");
    out << "d,bound,poly_bound,summed_poly_bound,lower_bound\n";
    const BoundPoly p = n >= 3 ? poly_bound(n) : BoundPoly();
    const BoundPoly s = n >= 3 ? summed_poly_bound(n) : BoundPoly();
    for (int d = 0; d <= dmax; d += 2) {
        out << d << "," << pfister_number_bound(n, d) << ",";
        if (n >= 3) out << floor_value(p(Rational(d))) << "," << floor_value(s(Rational(d)));
        else out << ",";
        // Generic lower bounds: n/2 for I^2 forms, floor(d/4) - 1 for I^3 forms.
        std::int64_t lower = 0;
        if (n == 1) lower = d / 2;
        if (n == 2) lower = d >= 4 ? d / 2 - 1 : 0;
        if (n == 3) lower = d >= 8 ? d / 4 - 1 : 0;
        out << "," << lower << "\n";
    }
    return ok;
}

int tabulate_cmd(const std::string& field_text, int n, const std::vector<int>& dims, int samples,
                 std::uint64_t seed, std::ostream& out) {
    const FieldDesc field = parse_field(field_text);
    if (n < 1) throw PreconditionError("tabulate: n must be positive");
    out << "d,samples,terms,max_gp,rejections\n";
    for (int d : dims) {
        const int terms = (d + (1 << n) - 1) / (1 << n) + 1;
        FormSampler sampler(field, n, seed + static_cast<std::uint64_t>(d));
        int max_gp = 0, drawn = 0;
        std::size_t rejections = 0;
        for (int i = 0; i < samples; ++i) {
            const auto s = sampler.sample(static_cast<std::size_t>(d), terms, 20000);
            if (!s) break;
            ++drawn;
            rejections += s->rejections;
            max_gp = std::max(max_gp, pfister_number(s->form, n).value);
        }
        out << d << "," << drawn << "," << terms << "," << max_gp << "," << rejections << "\n";
    }
    return ok;
}

int verify_cmd(const std::string& suite, std::uint64_t seed, int samples, bool verbose, bool as_json,
               std::ostream& out, std::ostream& err) {
    SuiteOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    if (verbose) opts.log = &err;
    const auto results = run_suite(suite, opts);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (as_json) {
            arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                           {"seconds", r.seconds}});
        } else {
            out << format_result(r) << "\n";
        }
    }
    if (as_json) out << with_schema({{"suite", suite}, {"passed", all}, {"criteria", arr}}).dump(2) << "\n";
    return all ? ok : suite_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratic forms over iterated Laurent series fields"};
    app.require_subcommand(1);

    Inputs in;
    auto* analyze_cmd = app.add_subcommand("analyze", "dimension, anisotropic part, Witt index, value set, I^n ladder");
    add_inputs(analyze_cmd, in);

    int n = 2, threads = 0;
    bool unscaled = false;
    std::optional<int> cap;
    auto* pn = app.add_subcommand("pfister-number", "exact GP_n (and P_n) with a certificate");
    add_inputs(pn, in);
    pn->add_option("--n", n, "Pfister fold")->check(CLI::Range(1, 8));
    pn->add_flag("--unscaled", unscaled, "also compute P_n");
    pn->add_option("--depth-cap", cap, "largest number of terms to try");
    pn->add_option("--threads", threads, "worker threads (0: RIGIDWITT_THREADS or hardware)");

    int dim = 14;
    auto* cls = app.add_subcommand("classify", "14- or 16-dimensional I^3 classification report");
    add_inputs(cls, in);
    cls->add_option("--dim", dim, "14 or 16")->required();

    std::string at;
    auto* dec = app.add_subcommand("decompose", "phi = sigma + <<-t>> tau along a square class");
    add_inputs(dec, in);
    dec->add_option("--at", at, "square class with an exponent bit")->required();

    int dmax = 16;
    auto* bnd = app.add_subcommand("bounds", "CSV of the bounds on GP_n(F, d)");
    bnd->add_option("--n", n, "Pfister fold")->required();
    bnd->add_option("--dmax", dmax, "largest even dimension")->required();

    std::string field_text = "F3[t1,t2,t3,t4,t5]";
    std::vector<int> dims{8, 12, 14, 16};
    int samples = 20;
    std::uint64_t seed = 20240611;
    auto* tab = app.add_subcommand("tabulate", "max GP_n over random I^n samples per dimension (CSV)");
    tab->add_option("--field", field_text, "field model");
    tab->add_option("--n", n, "Pfister fold");
    tab->add_option("--dims", dims, "dimensions")->delimiter(',');
    tab->add_option("--samples", samples, "samples per dimension");
    tab->add_option("--seed", seed, "RNG seed");

    std::string suite;
    bool verbose = false, verify_json = false;
    int suite_samples = 200;
    auto* ver = app.add_subcommand("verify", "run an acceptance suite");
    ver->add_option("suite", suite, "acceptance, 1..8 or a suite alias")->required();
    ver->add_option("--seed", seed, "RNG seed");
    ver->add_option("--samples", suite_samples, "samples per dimension");
    ver->add_flag("--verbose", verbose, "progress on stderr");
    ver->add_flag("--json", verify_json, "JSON output");

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << "run with --help for usage\n";
        return usage;
    }

    try {
        if (*analyze_cmd) return analyze(in, out);
        if (*pn) return pfister_number_cmd(in, n, unscaled, cap, threads, out);
        if (*cls) return classify_cmd(in, dim, out);
        if (*dec) return decompose_cmd(in, at, out);
        if (*bnd) return bounds_cmd(n, dmax, out);
        if (*tab) return tabulate_cmd(field_text, n, dims, samples, seed, out);
        if (*ver) return verify_cmd(suite, seed, suite_samples, verbose, verify_json, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const DepthCapExceeded& e) {
        err << "depth cap " << e.cap() << " exceeded: " << e.what() << "\n";
        return depth_cap;
    } catch (const InternalContradiction& e) {
        err << "internal contradiction: " << e.what() << "\n";
        return internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return precondition;
    }
    return usage;
}

}  // namespace rigidwitt::cli
