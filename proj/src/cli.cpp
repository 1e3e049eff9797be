#include "witt/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "witt/json_io.hpp"

namespace witt {

namespace {

struct GlobalOptions {
    std::string format = "json";
    std::optional<double> tol;
    std::uint64_t seed = 42;
    std::string out_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::BadParameter, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON when the argument looks like an object, a file path otherwise.
Json load_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') return parse_json(arg);
    return parse_json(read_file(arg));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(Errc::BadParameter, "not an integer list: " + text);
        }
    }
    if (out.empty()) throw Error(Errc::BadParameter, "empty integer list");
    return out;
}

Coefficient parse_alpha(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return Coefficient::parse_rational(text);
    try {
        return Coefficient(Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))));
    } catch (const std::invalid_argument&) {
        throw Error(Errc::BadParameter, "alpha must be p/q or re,im: " + text);
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(Errc::BadParameter, "range must look like 4..5: " + text);
    }
}

SpanInput load_span(const std::string& arg, double tol) {
    const Json j = load_json_arg(arg);
    Json a, b;
    if (j.contains("basis")) {
        const Json& basis = j.at("basis");
        if (!basis.is_array() || basis.size() != 2) throw Error(Errc::BadParameter, "\"basis\" must hold two fields");
        a = basis[0];
        b = basis[1];
    } else if (j.contains("A") && j.contains("B")) {
        a = j.at("A");
        b = j.at("B");
    } else {
        throw Error(Errc::ParseError, "span file needs \"basis\": [A, B]");
    }
    VectorField fa = field_from_json(a), fb = field_from_json(b);
    if (fa.backend() != fb.backend()) {
        fa = {fa.poly.to_float()};
        fb = {fb.poly.to_float()};
    }
    return {fa, fb, tol};
}

std::string short_str(const Coefficient& c) {
    if (c.is_exact()) return c.exact().get_str();
    const Complex z = c.to_complex();
    std::ostringstream ss;
    ss << std::setprecision(10) << z.real();
    if (z.imag() != 0.0) ss << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return ss.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string sci(double v) {
    std::ostringstream ss;
    ss << std::scientific << std::setprecision(2) << v;
    return ss.str();
}

class Emitter {
public:
    Emitter(const GlobalOptions& g, std::ostream& out) : g_(g), out_(out) {}

    // table is used only for --format table.
    void emit(const Json& j, const std::function<void(std::ostream&)>& table) {
        if (g_.format == "table") {
            table(out_);
        } else {
            out_ << j.dump(2) << '\n';
        }
        if (!g_.out_path.empty()) {
            std::ofstream f(g_.out_path);
            if (!f) throw Error(Errc::BadParameter, "cannot write " + g_.out_path);
            f << j.dump(2) << '\n';
        }
    }

private:
    const GlobalOptions& g_;
    std::ostream& out_;
};

void print_mu_table(std::ostream& os, const MuSignature& mu) {
    os << "n = " << mu.n() << ", k = " << mu.k() << ", r = " << join_ints(mu.r.r) << '\n';
    for (std::size_t i = 0; i < mu.a.size(); ++i) os << "  a_" << i + 1 << " = " << short_str(mu.a[i]) << '\n';
}

int cmd_construct(const GlobalOptions& g, const std::string& mu_arg, Emitter& em) {
    const double tol = g.tol.value_or(kDefaultMembershipTolerance);
    const MuSignature mu = mu_from_json(load_json_arg(mu_arg), tol);
    const Smu s = build_subalgebra(mu, g.tol.value_or(kDefaultBracketTolerance));
    Json j{{"mu", to_json(mu)},
           {"P", to_json(s.P)},
           {"Q", to_json(s.Q)},
           {"c", to_json(s.c)},
           {"certificate", {{"bracket_residual", s.bracket_residual}, {"verified", true}}}};
    em.emit(j, [&](std::ostream& os) {
        print_mu_table(os, mu);
        os << "P = " << to_string(s.P) << '\n' << "Q = " << to_string(s.Q) << '\n';
        os << "c = " << short_str(s.c) << '\n' << "[P D, Q D] = c Q D  residual " << sci(s.bracket_residual) << '\n';
    });
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& span_arg, Emitter& em) {
    const SpanInput in = load_span(span_arg, g.tol.value_or(kDefaultSpanTolerance));
    const ClosureCoords cc = closure_check(in);
    Json j{{"closed", true}, {"alpha", to_json(cc.alpha)}, {"beta", to_json(cc.beta)}};
    em.emit(j, [&](std::ostream& os) {
        os << "closed: [A, B] = " << short_str(cc.alpha) << " A + " << short_str(cc.beta) << " B\n";
    });
    return kExitOk;
}

int cmd_classify(const GlobalOptions& g, const std::string& span_arg, Emitter& em) {
    const SpanInput in = load_span(span_arg, g.tol.value_or(kDefaultSpanTolerance));
    const Classification c = classify_with_certificate(in);
    Json j = to_json(c.descriptor);
    j["certificate"] = to_json(c.certificate);
    em.emit(j, [&](std::ostream& os) {
        if (const auto* z = std::get_if<Zm>(&c.descriptor)) {
            os << "z(" << z->m << ") = span{D, t^" << z->m << " D}\n";
        } else {
            const auto& s = std::get<Smu>(c.descriptor);
            os << "s(mu)\n";
            print_mu_table(os, s.mu);
            os << "P = " << to_string(s.P) << '\n' << "Q = " << to_string(s.Q) << '\n';
        }
        os << "eigenvalue c = " << short_str(c.certificate.eigenvalue) << '\n';
    });
    return kExitOk;
}

void print_solutions(std::ostream& os, const SolutionSet& s) {
    os << "r = " << join_ints(s.r.r) << "  n = " << s.r.n << "  k = " << s.r.k << "  seed = " << s.seed << '\n';
    os << "points " << s.solutions.size() << " / bound " << projective_bound(s.r.n) << "  orbits " << s.orbit_count
       << "  complete " << (s.complete ? "yes" : "no") << " (" << s.reason << ")\n";
    for (std::size_t i = 0; i < s.solutions.size(); ++i) {
        const auto& p = s.solutions[i];
        os << std::setw(3) << i + 1 << "  [";
        for (std::size_t t = 0; t < p.a.size(); ++t) os << (t ? ", " : "") << short_str(p.a[t]);
        os << "]  residual " << sci(p.residual) << "  rank " << p.jacobian_rank << '\n';
    }
}

int cmd_solve(const GlobalOptions& g, const std::string& r_arg, std::optional<long> starts, unsigned threads,
              bool closed, Emitter& em) {
    const RVector r = RVector::from_entries(parse_int_list(r_arg));
    SolutionSet s;
    if (closed) {
        s = closed_form(r);
        s.seed = g.seed;
    } else {
        SolverOptions opts;
        opts.starts = starts;
        opts.seed = g.seed;
        opts.threads = threads;
        if (g.tol) opts.newton_tol = *g.tol;
        s = solve_numeric(r, opts);
    }
    em.emit(to_json(s), [&](std::ostream& os) { print_solutions(os, s); });
    return kExitOk;
}

int cmd_sweep(const GlobalOptions& g, const std::string& range, std::optional<long> starts, unsigned threads,
              Emitter& em) {
    const auto [lo, hi] = parse_range(range);
    SolverOptions opts;
    opts.starts = starts;
    opts.seed = g.seed;
    opts.threads = threads;
    if (g.tol) opts.newton_tol = *g.tol;
    const SweepReport rep = sweep_conjecture(lo, hi, opts);
    em.emit(to_json(rep), [&](std::ostream& os) {
        os << "sweep n = " << lo << ".." << hi << "  seed = " << rep.seed << '\n';
        os << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(22) << "r" << std::setw(7)
           << "found" << std::setw(8) << "orbits" << std::setw(7) << "bound" << std::setw(10) << "expected"
           << "status\n";
        for (const auto& e : rep.entries) {
            os << std::setw(4) << e.r.n << std::setw(4) << e.r.k << std::setw(22) << join_ints(e.r.r) << std::setw(7)
               << e.found << std::setw(8) << e.orbits << std::setw(7) << e.bound << std::setw(10)
               << (e.expected ? std::to_string(*e.expected) : "-")
               << (e.empty ? "EMPTY (best residual " + sci(e.best_residual) + ")" : "ok") << '\n';
        }
        os << std::right << rep.entries.size() << " tuples, " << rep.empty_count << " empty\n";
    });
    return kExitOk;
}

int cmd_virasoro(const GlobalOptions& g, const std::string& mu_arg, const std::string& alpha_arg,
                 std::optional<int> m, Emitter& em) {
    if (mu_arg.empty() == !m.has_value()) {
        throw Error(Errc::BadParameter, "virasoro needs exactly one of --mu or --m");
    }
    if (m) {
        const auto d = lift_3dim(*m);
        const Rational beta = std::get<Dim3a>(d).beta();
        Json j{{"m", *m}, {"beta", beta.get_str()}, {"lift", to_json(d)}};
        em.emit(j, [&](std::ostream& os) {
            os << "span{L_" << -*m << ", L_0 + " << beta.get_str() << " K, L_" << *m << "}  closes\n";
        });
        return kExitOk;
    }
    const MuSignature mu = mu_from_json(load_json_arg(mu_arg), g.tol.value_or(kDefaultMembershipTolerance));
    const Coefficient alpha = parse_alpha(alpha_arg);
    const auto lifted = lift_descriptor(build_subalgebra(mu), alpha);
    const auto& d = std::get<Dim2c>(lifted);
    const auto b = basis(lifted);
    const bool ok = closes(b, g.tol.value_or(kDefaultSpanTolerance));
    if (!ok) throw Error(Errc::VerificationFailed, "lifted span does not close");
    Json j{{"beta0", to_json(d.beta0)}, {"lambda", to_json(c_mu(mu))}, {"lift", to_json(lifted)}, {"closes", ok}};
    em.emit(j, [&](std::ostream& os) {
        print_mu_table(os, mu);
        os << "lambda = " << short_str(c_mu(mu)) << "\nbeta0 = " << short_str(d.beta0) << '\n';
        os << "span{P D + " << short_str(d.alpha) << " K, Q D + " << short_str(d.beta0) << " K}  closes\n";
    });
    return kExitOk;
}

int cmd_catalog(int dim, Emitter& em) {
    const auto families = catalog(dim);
    Json j = Json::array();
    for (const auto& f : families) j.push_back(to_json(f));
    em.emit(j, [&](std::ostream& os) {
        for (const auto& f : families) {
            os << f.name << "  dim " << f.dim << "  " << f.span << "  slots:";
            for (const auto& s : f.slots) os << ' ' << s;
            os << '\n';
        }
    });
    return kExitOk;
}

}  // namespace

int exit_code_for(Errc code) noexcept {
    switch (code) {
        case Errc::NotClosed:
        case Errc::StructureViolation:
        case Errc::AbelianContradiction:
        case Errc::ValidationFailed:
            return kExitRejected;
        case Errc::VerificationFailed:
        case Errc::UncertifiedFactoring:
        case Errc::NoConvergence:
            return kExitCertification;
        default:
            return kExitValidation;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-dimensional subalgebras of the Witt algebra and their Virasoro lifts", "wittsub"};
    app.fallthrough();
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--tol", g.tol, "Tolerance override");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--out", g.out_path, "Also write the JSON result to this path");

    std::string mu_arg, span_arg, r_arg, range = "4..5", alpha_arg = "0";
    std::optional<long> starts;
    std::optional<int> m;
    unsigned threads = 1;
    int dim = 0;
    bool closed = false;

    auto* construct = app.add_subcommand("construct", "Build s(mu) and certify its bracket");
    construct->add_option("--mu", mu_arg, "mu as a JSON file or inline JSON")->required();
    auto* verify = app.add_subcommand("verify", "Check that a span closes under the bracket");
    verify->add_option("--span", span_arg, "Span file {\"basis\": [A, B]}")->required();
    auto* classify = app.add_subcommand("classify", "Classify a two-dimensional span");
    classify->add_option("--span", span_arg, "Span file {\"basis\": [A, B]}")->required();
    auto* solve = app.add_subcommand("solve-vr", "Projective points of V(r)^x");
    solve->add_option("--r", r_arg, "Comma-separated r, e.g. 2,1,-1")->required();
    solve->add_option("--starts", starts, "Number of Newton starts");
    solve->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    solve->add_flag("--closed-form", closed, "Use the explicit parametrization (n <= 3)");
    auto* sweep = app.add_subcommand("sweep", "Non-emptiness sweep over Gamma-valid r");
    sweep->add_option("--n", range, "Range of n, e.g. 4..5");
    sweep->add_option("--starts", starts, "Number of Newton starts per tuple");
    sweep->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    auto* vir = app.add_subcommand("virasoro", "Central constants of lifted subalgebras");
    vir->add_option("--mu", mu_arg, "mu as a JSON file or inline JSON");
    vir->add_option("--alpha", alpha_arg, "Central constant of the first basis element (\"p/q\" or re,im)");
    vir->add_option("--m", m, "Three-dimensional lift span{L_-m, L_0 + beta K, L_m}");
    auto* cat = app.add_subcommand("catalog", "Families of finite-dimensional subalgebras");
    cat->add_option("--dim", dim, "Dimension 1..4")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (g.tol) require_tolerance(*g.tol);
        Emitter em(g, out);
        if (*construct) return cmd_construct(g, mu_arg, em);
        if (*verify) return cmd_verify(g, span_arg, em);
        if (*classify) return cmd_classify(g, span_arg, em);
        if (*solve) return cmd_solve(g, r_arg, starts, threads, closed, em);
        if (*sweep) return cmd_sweep(g, range, starts, threads, em);
        if (*vir) return cmd_virasoro(g, mu_arg, alpha_arg, m, em);
        if (*cat) return cmd_catalog(dim, em);
    } catch (const Error& e) {
        err << "wittsub: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const Json::exception& e) {
        err << "wittsub: ParseError: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}

}  // namespace witt
