// Command-line front end: constructs eigenpolynomials, reports spectra,
// runs torus Gram/orthogonality studies, checks reflection-equation
// residuals, and exercises the grassmannian parameter correspondence.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "koorn/cache.hpp"
#include "koorn/grassmann.hpp"
#include "koorn/koornwinder.hpp"
#include "koorn/reflection.hpp"
#include "koorn/serialize.hpp"
#include "koorn/torus.hpp"

namespace {

using koorn::DominantWeight;
using koorn::ParamSet;
using koorn::Rational;
using nlohmann::json;

constexpr double kOffdiagTol = 1e-8;
constexpr double kConvergenceTol = 1e-10;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

Rational parse_rational(const std::string& s, const char* flag) {
    try {
        return Rational::parse(s);
    } catch (const koorn::Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

DominantWeight parse_weight(const std::string& s, int l) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            parts.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--lambda: cannot parse integer part \"" + item + "\"");
        }
    }
    if (static_cast<int>(parts.size()) != l)
        throw UsageError("--lambda " + s + " has " + std::to_string(parts.size()) +
                         " parts but --l is " + std::to_string(l));
    try {
        return DominantWeight(std::move(parts));
    } catch (const koorn::Error& e) {
        throw UsageError(std::string("--lambda ") + s + ": " + e.what());
    }
}

std::string fmt17(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// Final output: --out writes the payload to a file, otherwise stdout.
void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open --out path " + out_path);
    out << payload;
    std::cerr << "wrote " << out_path << "\n";
}

// Shared option state filled by CLI11.
struct Options {
    int l = 0;
    int n = 0;
    std::vector<std::string> lambdas;
    std::string q, t, a, b, c, d, s, u;
    int trunc = 40;
    int grid = 64;
    std::string out;
    std::string cache_dir;
    std::string format = "json";
    std::string x_file;
    bool restrict_polys = false;
};

ParamSet params_from(const Options& o) {
    return ParamSet(parse_rational(o.q, "--q"), parse_rational(o.t, "--t"),
                    parse_rational(o.a, "--a"), parse_rational(o.b, "--b"),
                    parse_rational(o.c, "--c"), parse_rational(o.d, "--d"));
}

std::vector<DominantWeight> weights_from(const Options& o) {
    if (o.lambdas.empty()) throw UsageError("at least one --lambda is required");
    std::vector<DominantWeight> out;
    out.reserve(o.lambdas.size());
    for (const auto& s : o.lambdas) out.push_back(parse_weight(s, o.l));
    return out;
}

// KOORN_CACHE in the environment overrides the --cache flag.
std::string resolve_cache_dir(const Options& o) {
    if (const char* env = std::getenv("KOORN_CACHE"); env && *env) return env;
    return o.cache_dir;
}

// Load-or-compute through the cache when a directory is configured.
koorn::KoornwinderPoly obtain_poly(const DominantWeight& lam, const ParamSet& p,
                                   const std::string& cache_dir) {
    if (!cache_dir.empty()) {
        std::string warning;
        if (auto hit = koorn::cache_load(cache_dir, lam, p, &warning)) return *hit;
        if (!warning.empty()) std::cerr << "warning: " << warning << "; recomputing\n";
    }
    koorn::KoornwinderPoly P = koorn::koornwinder(lam, p);
    if (!cache_dir.empty()) koorn::cache_store(cache_dir, P);
    return P;
}

void warn_boundary(const ParamSet& p) {
    if (p.is_boundary())
        std::cerr << "warning: abcd = -q boundary parameters; eigenvalue separation is not "
                     "guaranteed there\n";
}

std::string pretty_poly(const koorn::KoornwinderPoly& P) {
    std::ostringstream os;
    os << "P_" << P.lam.str() << " [" << P.params.canonical_key() << "]\n";
    for (auto it = P.coeffs.coeffs().rbegin(); it != P.coeffs.coeffs().rend(); ++it)
        os << "  " << it->second << " * m" << it->first.str() << "\n";
    return os.str();
}

int cmd_poly(const Options& o) {
    if (o.format == "csv") throw UsageError("poly supports --format json|pretty");
    if (o.lambdas.size() != 1) throw UsageError("poly needs exactly one --lambda");
    ParamSet p = params_from(o);
    warn_boundary(p);
    DominantWeight lam = parse_weight(o.lambdas.front(), o.l);

    koorn::KoornwinderPoly P = obtain_poly(lam, p, resolve_cache_dir(o));
    // Emission is gated on a from-scratch verification regardless of where
    // the polynomial came from.
    if (!koorn::verify_eigen(P).is_zero()) {
        std::cerr << "verification failure: eigen-residual is nonzero\n";
        return 1;
    }
    if (o.format == "pretty") {
        emit(pretty_poly(P), o.out);
    } else {
        json doc = koorn::to_json(P);
        doc["verifies"] = json::array({"eq:1.4"});
        emit(doc.dump(2) + "\n", o.out);
    }
    return 0;
}

int cmd_spectrum(const Options& o) {
    ParamSet p = params_from(o);
    warn_boundary(p);
    std::vector<DominantWeight> lams = weights_from(o);

    std::vector<Rational> values;
    values.reserve(lams.size());
    for (const auto& lam : lams) values.push_back(koorn::eigenvalue_c(lam, p));

    json collisions = json::array();
    bool collided = false;
    for (size_t i = 0; i < lams.size(); ++i)
        for (size_t j = i + 1; j < lams.size(); ++j)
            if (lams[i] != lams[j] && values[i] == values[j]) {
                collisions.push_back(json::array({i, j}));
                collided = true;
            }

    json eigenvalues = json::array();
    for (size_t i = 0; i < lams.size(); ++i)
        eigenvalues.push_back(json{{"lambda", koorn::to_json(lams[i])}, {"c", values[i].str()}});
    json doc{{"verifies", json::array({"eq:1.5"})},
             {"params", koorn::to_json(p)},
             {"boundary", p.is_boundary()},
             {"eigenvalues", eigenvalues},
             {"collisions", collisions}};

    if (o.format == "csv") {
        std::ostringstream os;
        os << "lambda,c\n";
        for (size_t i = 0; i < lams.size(); ++i)
            os << "\"" << lams[i].str() << "\"," << values[i] << "\n";
        emit(os.str(), o.out);
    } else if (o.format == "pretty") {
        std::ostringstream os;
        for (size_t i = 0; i < lams.size(); ++i)
            os << "c" << lams[i].str() << " = " << values[i] << "\n";
        if (collided) os << "eigenvalue collisions detected\n";
        emit(os.str(), o.out);
    } else {
        emit(doc.dump(2) + "\n", o.out);
    }
    return collided ? 1 : 0;
}

int cmd_gram(const Options& o) {
    ParamSet p = params_from(o);
    std::vector<DominantWeight> lams = weights_from(o);
    const std::string cache_dir = resolve_cache_dir(o);

    std::vector<koorn::KoornwinderPoly> polys;
    polys.reserve(lams.size());
    for (const auto& lam : lams) polys.push_back(obtain_poly(lam, p, cache_dir));

    koorn::QuadratureConfig base{o.trunc, o.grid};
    koorn::QuadratureConfig fine{2 * o.trunc, 2 * o.grid};
    koorn::GramResult g1 = koorn::gram(polys, base);
    koorn::GramResult g2 = koorn::gram(polys, fine);

    const double offdiag = g1.max_offdiag_normalized();
    const double delta = g1.max_delta(g2);
    double max_imag = 0.0;
    for (const auto& row : g1.entries)
        for (const auto& v : row) max_imag = std::max(max_imag, std::abs(v.imag()));
    const bool pass = offdiag < kOffdiagTol && delta < kConvergenceTol;

    auto report_of = [](const koorn::GramResult& g) {
        return json{{"N", g.trunc},
                    {"M", g.grid},
                    {"max_offdiag", g.max_offdiag_normalized()},
                    {"skipped_points", g.skipped}};
    };
    json matrix = json::array();
    for (const auto& row : g1.entries) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.real());
        matrix.push_back(std::move(r));
    }
    json lamsj = json::array();
    for (const auto& lam : lams) lamsj.push_back(koorn::to_json(lam));
    json doc{{"verifies", json::array({"eq:1.10"})},
             {"params", koorn::to_json(p)},
             {"lambdas", lamsj},
             {"report", report_of(g1)},
             {"refined", report_of(g2)},
             {"delta", delta},
             {"max_imag", max_imag},
             {"matrix", matrix},
             {"pass", pass}};

    if (o.format == "csv") {
        std::ostringstream os;
        for (const auto& row : g1.entries) {
            for (size_t j = 0; j < row.size(); ++j)
                os << (j ? "," : "") << fmt17(row[j].real());
            os << "\n";
        }
        emit(os.str(), o.out);
    } else if (o.format == "pretty") {
        std::ostringstream os;
        os << "gram " << g1.entries.size() << "x" << g1.entries.size() << "  N=" << base.trunc
           << " M=" << base.grid << "\n";
        for (const auto& row : g1.entries) {
            for (const auto& v : row) os << "  " << fmt17(v.real());
            os << "\n";
        }
        os << "max normalized off-diagonal: " << fmt17(offdiag) << "\n";
        os << "doubling delta:              " << fmt17(delta) << "\n";
        os << "skipped points:              " << g1.skipped << "\n";
        os << (pass ? "PASS" : "FAIL") << "\n";
        emit(os.str(), o.out);
    } else {
        emit(doc.dump(2) + "\n", o.out);
    }
    return pass ? 0 : 1;
}

int cmd_reflect(const Options& o) {
    if (o.format == "csv") throw UsageError("reflect supports --format json|pretty");
    if (o.n < 2) throw UsageError("reflect needs --n >= 2");
    if (o.q.empty()) throw UsageError("reflect needs --q");
    koorn::RMatrix R = koorn::build_R(o.n, parse_rational(o.q, "--q"));

    const bool yb = koorn::yang_baxter_residual(R).is_zero();
    const bool hecke = koorn::hecke_residual(R).is_zero();
    const bool rinv =
        (R.entries * koorn::r_minus(R)) == koorn::ExactMatrix::identity(o.n * o.n);

    koorn::ExactMatrix X(1, 1);
    std::string x_source;
    if (!o.x_file.empty()) {
        std::ifstream in(o.x_file);
        if (!in) throw UsageError("cannot read --x file " + o.x_file);
        json j;
        try {
            j = json::parse(in);
        } catch (const std::exception& e) {
            throw UsageError("cannot parse --x file: " + std::string(e.what()));
        }
        X = koorn::matrix_from_json(j);
        x_source = "file:" + o.x_file;
    } else {
        if (o.l < 1) throw UsageError("reflect needs --l (or --x FILE)");
        if (o.s.empty()) throw UsageError("reflect needs --s (or --x FILE)");
        X = koorn::build_J(o.n, o.l, parse_rational(o.s, "--s"));
        x_source = "J";
    }

    koorn::ExactMatrix res = koorn::reflection_residual(X, R);
    const bool refl = res.is_zero();
    const bool pass = yb && hecke && rinv && refl;

    json doc{{"verifies", json::array({"eq:2.12", "eq:2.14"})},
             {"n", o.n},
             {"q", R.q.str()},
             {"x_source", x_source},
             {"yang_baxter", yb},
             {"hecke", hecke},
             {"r_inverse", rinv},
             {"reflection", refl},
             {"residual_max_abs", res.max_abs().str()},
             {"pass", pass}};
    if (x_source == "J") {
        doc["l"] = o.l;
        doc["s"] = parse_rational(o.s, "--s").str();
    }

    if (o.format == "pretty") {
        std::ostringstream os;
        os << "yang_baxter: " << (yb ? "PASS" : "FAIL") << "\n"
           << "hecke:       " << (hecke ? "PASS" : "FAIL") << "\n"
           << "r_inverse:   " << (rinv ? "PASS" : "FAIL") << "\n"
           << "reflection(" << x_source << "): " << (refl ? "PASS" : "FAIL")
           << "  max |residual| = " << res.max_abs() << "\n"
           << (pass ? "PASS" : "FAIL") << "\n";
        emit(os.str(), o.out);
    } else {
        emit(doc.dump(2) + "\n", o.out);
    }
    return pass ? 0 : 1;
}

int cmd_grassmann(const Options& o) {
    if (o.format == "csv") throw UsageError("grassmann supports --format json|pretty");
    if (o.q.empty() || o.s.empty() || o.u.empty())
        throw UsageError("grassmann needs --q, --s and --u");
    koorn::GrassmannSetup setup(o.n, o.l, parse_rational(o.q, "--q"),
                                parse_rational(o.s, "--s"), parse_rational(o.u, "--u"));

    std::vector<DominantWeight> mus;
    if (!o.lambdas.empty()) {
        for (const auto& s : o.lambdas) mus.push_back(parse_weight(s, o.l));
    } else {
        // Default sweep: every dominant weight of norm <= 2.
        std::vector<int> cap(static_cast<size_t>(o.l), 2);
        for (const auto& mu : koorn::weights_below(DominantWeight(cap)))
            if (mu.norm() <= 2) mus.push_back(mu);
    }

    ParamSet params = koorn::param_map(setup);
    const Rational abcd_expect = setup.q.pow(4L + 2L * (setup.n - 2 * setup.l));
    const bool abcd_ok = params.abcd() == abcd_expect;

    koorn::RadialReport report = koorn::radial_consistency(mus, setup);
    const bool pass = report.pass && abcd_ok;

    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"mu", koorn::to_json(row.mu)},
                            {"eigen", row.eigen.str()},
                            {"chi_diff", row.chi_diff.str()},
                            {"ok", row.ok}});
    json doc{{"verifies", json::array({"eq:3.6", "eq:3.9", "thm:3.3"})},
             {"setup",
              json{{"n", setup.n},
                   {"l", setup.l},
                   {"q", setup.q.str()},
                   {"s", setup.s.str()},
                   {"u", setup.u.str()}}},
             {"params", koorn::to_json(params)},
             {"abcd_identity", abcd_ok},
             {"kappa", report.kappa.str()},
             {"rows", rows},
             {"pass", pass}};
    if (o.restrict_polys) {
        json polys = json::array();
        for (const auto& mu : mus)
            polys.push_back(koorn::to_json(koorn::spherical_restriction(mu, setup)));
        doc["restricted"] = polys;
    }

    if (o.format == "pretty") {
        std::ostringstream os;
        os << "mapped params: " << params.canonical_key() << "\n"
           << "abcd identity: " << (abcd_ok ? "PASS" : "FAIL") << "\n"
           << "kappa = " << report.kappa << "\n";
        for (const auto& row : report.rows)
            os << "  mu=" << row.mu.str() << "  eigen=" << row.eigen
               << "  chi_diff=" << row.chi_diff << "  " << (row.ok ? "ok" : "MISMATCH") << "\n";
        os << (pass ? "PASS" : "FAIL") << "\n";
        emit(os.str(), o.out);
    } else {
        emit(doc.dump(2) + "\n", o.out);
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Koornwinder eigenpolynomials, torus orthogonality, and "
                 "reflection-equation verification"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML config file");
    app.fallthrough(false);

    Options o;
    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--q", o.q, "parameter q (rational or finite decimal)")->required();
        cmd->add_option("--t", o.t, "parameter t")->required();
        cmd->add_option("--a", o.a, "parameter a")->required();
        cmd->add_option("--b", o.b, "parameter b")->required();
        cmd->add_option("--c", o.c, "parameter c")->required();
        cmd->add_option("--d", o.d, "parameter d")->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    CLI::App* poly = app.add_subcommand("poly", "construct one eigenpolynomial");
    poly->add_option("--l", o.l, "number of variables")->required();
    poly->add_option("--lambda", o.lambdas, "weight, comma separated parts")->required();
    add_params(poly);
    poly->add_option("--cache", o.cache_dir,
                     "cache directory (KOORN_CACHE environment variable overrides)");
    add_common(poly);

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues for a list of weights");
    spectrum->add_option("--l", o.l, "number of variables")->required();
    spectrum->add_option("--lambda", o.lambdas, "weight, repeatable")->required();
    add_params(spectrum);
    add_common(spectrum);

    CLI::App* gramc = app.add_subcommand("gram", "torus Gram matrix and convergence report");
    gramc->add_option("--l", o.l, "number of variables")->required();
    gramc->add_option("--lambda", o.lambdas, "weight, repeatable")->required();
    add_params(gramc);
    gramc->add_option("--trunc", o.trunc, "q-factorial truncation length")
        ->check(CLI::NonNegativeNumber);
    gramc->add_option("--grid", o.grid, "grid points per torus dimension")
        ->check(CLI::PositiveNumber);
    gramc->add_option("--cache", o.cache_dir,
                      "cache directory (KOORN_CACHE environment variable overrides)");
    add_common(gramc);

    CLI::App* reflect = app.add_subcommand("reflect", "reflection-equation residuals");
    reflect->add_option("--n", o.n, "vector-representation dimension")->required();
    reflect->add_option("--l", o.l, "block size of the solution family");
    reflect->add_option("--s", o.s, "family parameter s");
    reflect->add_option("--q", o.q, "R-matrix parameter q")->required();
    reflect->add_option("--x", o.x_file, "JSON file with an explicit matrix to test");
    add_common(reflect);

    CLI::App* grassmann = app.add_subcommand("grassmann", "parameter map and kappa report");
    grassmann->add_option("--n", o.n, "big torus rank")->required();
    grassmann->add_option("--l", o.l, "block size")->required();
    grassmann->add_option("--q", o.q, "deformation parameter")->required();
    grassmann->add_option("--s", o.s, "family parameter s")->required();
    grassmann->add_option("--u", o.u, "family parameter u")->required();
    grassmann->add_option("--lambda", o.lambdas, "weight mu, repeatable (default: |mu| <= 2)");
    grassmann->add_flag("--restrict", o.restrict_polys,
                        "also emit the restricted polynomials");
    add_common(grassmann);

    try {
        app.parse(argc, argv);
        if (poly->parsed()) return cmd_poly(o);
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (gramc->parsed()) return cmd_gram(o);
        if (reflect->parsed()) return cmd_reflect(o);
        if (grassmann->parsed()) return cmd_grassmann(o);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const koorn::ParamError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const koorn::DimensionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const koorn::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const koorn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
