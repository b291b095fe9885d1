// freespec command-line tool.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "freespec/brown.hpp"
#include "freespec/errors.hpp"
#include "freespec/freeprod.hpp"
#include "freespec/io.hpp"
#include "freespec/matrixmodel.hpp"
#include "freespec/moments.hpp"
#include "freespec/spectra.hpp"
#include "freespec/transforms.hpp"
#include "freespec/verify.hpp"

namespace fs = freespec;
using fs::io::json;

namespace {

constexpr int kExitPrecondition = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string out;
    std::string a = "[[0,1],[1,0]]";
    std::string b = "[[0,1],[1,0]]";
    std::string alpha = "1";
    std::string beta = "1";
    std::string kind = "product";
    std::string format;
    std::string measure = "arcsine01";
    std::string suite = "full";
    std::size_t grid = fs::kRadialGrid;
    std::size_t boundary = 0;
    std::size_t raster = 1024;
    long long N = 512;
    int trials = 16;
    int n = 6;
    unsigned threads = 0;
    std::uint64_t seed = 42;
    double w = -0.5;
    double b1 = 2.0;
    double b2 = 3.0;
    bool numeric = false;
    bool evaluate = false;
    bool singular = false;
};

fs::Kind parse_kind(const std::string& k) { return k == "sum" ? fs::Kind::sum : fs::Kind::product; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit_radial(const Options& o, const fs::RadialMeasure& nu) {
    if (o.format == "json") {
        fs::io::write_output(o.out, dump(fs::io::radial_summary(nu)));
        return;
    }
    std::ostringstream ss;
    fs::io::write_radial_csv(ss, nu);
    fs::io::write_output(o.out, ss.str());
}

void emit_region(const Options& o, const fs::SpectrumRegion& r) {
    if (o.boundary > 0 || o.format == "csv") {
        std::ostringstream ss;
        fs::io::write_points_csv(ss, r.boundary(o.boundary > 0 ? o.boundary : 720));
        fs::io::write_output(o.out, ss.str());
        return;
    }
    fs::io::write_output(o.out, dump(fs::io::region_to_json(r)));
}

void run_decompose(const Options& o) {
    const fs::Mat2 b = fs::io::parse_matrix(o.b);
    const fs::SymbolicMat2 d = fs::decompose(b);
    if (!o.evaluate) {
        fs::io::write_output(o.out, d.to_string() + "\n");
        return;
    }
    const Eigen::MatrixXcd x = fs::evaluate_matrix_model(d, o.N, o.seed);
    json j;
    j["schema"] = 1;
    j["N"] = o.N;
    j["seed"] = o.seed;
    json rows = json::array();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(x.rows(), x.cols());
    fs::SymbolicMat2 sp = fs::SymbolicMat2::identity();
    fs::Mat2 bk = fs::Mat2::Identity();
    for (int k = 1; k <= 4; ++k) {
        p = p * x;
        sp = sp * d;
        bk = bk * b;
        rows.push_back({{"k", k},
                        {"model", fs::io::complex_number(p.trace() / static_cast<double>(x.rows()))},
                        {"symbolic", fs::io::complex_number(fs::symbolic_trace(sp))},
                        {"exact", fs::io::complex_number(fs::mat2::tau(bk))}});
    }
    j["traces"] = rows;
    fs::io::write_output(o.out, dump(j));
}

void run_moments(const Options& o) {
    const auto ms = fs::moment_sequence(parse_kind(o.kind), fs::io::parse_matrix(o.a), fs::io::parse_matrix(o.b), o.n);
    json j;
    j["schema"] = 1;
    j["kind"] = o.kind;
    json arr = json::array();
    for (auto m : ms) arr.push_back(fs::io::complex_number(m));
    j["moments"] = arr;
    fs::io::write_output(o.out, dump(j));
}

void run_classify(const Options& o) {
    const fs::Kind kind = parse_kind(o.kind);
    const fs::Mat2 a = fs::io::parse_matrix(o.a), b = fs::io::parse_matrix(o.b);
    const auto c = fs::classify_support(kind, a, b);
    json j;
    j["schema"] = 1;
    j["classification"] = fs::to_string(c.support);
    j["reason"] = c.reason;
    json cert = json::object();
    for (const auto& [name, v] : c.certificates) cert[name] = fs::io::complex_number(v);
    j["certificates"] = cert;
    j["r_diagonal"] = kind == fs::Kind::product ? fs::is_r_diagonal_product(a, b) : fs::is_r_diagonal_sum(a, b);
    fs::io::write_output(o.out, dump(j));
}

void run_s_transform(const Options& o) {
    const fs::MeasureR mu = fs::io::load_measure(o.measure);
    const auto s = fs::make_s_transform(mu, o.numeric ? fs::SMethodChoice::numeric : fs::SMethodChoice::automatic);
    json j;
    j["schema"] = 1;
    j["w"] = fs::io::number(o.w);
    j["S"] = fs::io::number(s(o.w));
    j["method"] = std::string(fs::to_string(s.method()));
    j["domain"] = {fs::io::number(s.domain().lo), fs::io::number(s.domain().hi)};
    fs::io::write_output(o.out, dump(j));
}

void run_simulate(const Options& o) {
    fs::ModelConfig cfg;
    cfg.N = o.N;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    cfg.what = o.singular ? fs::Observable::singular_values : fs::Observable::eigenvalues;
    const auto spec = fs::empirical_brown(fs::io::parse_matrix(o.a), fs::io::parse_matrix(o.b), parse_kind(o.kind), cfg);
    std::ostringstream ss;
    fs::io::write_cloud_csv(ss, spec);
    fs::io::write_output(o.out, ss.str());
}

int run_verify(const Options& o) {
    fs::VerifyOptions vo;
    vo.seed = o.seed;
    vo.threads = o.threads;
    std::ostringstream ss;
    bool ok = true;
    for (const auto& r : fs::run_suite(o.suite, vo)) {
        ss << fs::format_line(r) << "\n";
        ok = ok && r.pass();
    }
    ss << (ok ? "all criteria passed" : "some criteria failed") << "\n";
    fs::io::write_output(o.out, ss.str());
    return ok ? 0 : kExitPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Spectra and Brown measures in free products of 2x2 matrix algebras"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--out", o.out, "Output file (default stdout)");

    const auto add_ab = [&](CLI::App* c) {
        c->add_option("--A", o.a, "Copy-1 matrix as JSON, entries real or [re, im]");
        c->add_option("--B", o.b, "Copy-2 matrix as JSON");
    };
    const auto add_alpha_beta = [&](CLI::App* c) {
        c->add_option("--alpha", o.alpha, "Scalar, real or [re, im]");
        c->add_option("--beta", o.beta, "Scalar, real or [re, im]");
    };
    const auto add_kind = [&](CLI::App* c) {
        c->add_option("--kind", o.kind, "product or sum")->check(CLI::IsMember({"product", "sum"}));
    };
    const auto add_format = [&](CLI::App* c, const char* help) {
        c->add_option("--format", o.format, help)->check(CLI::IsMember({"csv", "json"}));
    };

    auto* brown = app.add_subcommand("brown", "Brown measures as radial CDF tables");
    brown->require_subcommand(1);
    auto* b_prod = brown->add_subcommand("product", "AB for traceless A, B");
    add_ab(b_prod);
    b_prod->add_option("--grid", o.grid, "Radial grid size");
    add_format(b_prod, "csv table (default) or json support descriptor");
    auto* b_sum = brown->add_subcommand("sum-nilpotent", "alpha E12 + beta F12");
    add_alpha_beta(b_sum);
    add_format(b_sum, "csv table (default) or json support descriptor");
    auto* b64 = brown->add_subcommand("example64", "diag(1,0) times [[alpha, beta], [0, alpha]]");
    add_alpha_beta(b64);
    b64->add_option("--grid", o.grid, "Radial grid size");
    add_format(b64, "csv component table (default) or json descriptor");
    auto* b65 = brown->add_subcommand("example65", "E12 times diag(alpha, beta)");
    add_alpha_beta(b65);
    b65->add_option("--grid", o.grid, "Radial grid size");
    add_format(b65, "csv table (default) or json support descriptor");

    auto* spectrum = app.add_subcommand("spectrum", "Spectra as regions");
    spectrum->require_subcommand(1);
    auto* s_prod = spectrum->add_subcommand("product", "Annulus for traceless A, B");
    add_ab(s_prod);
    s_prod->add_option("--boundary", o.boundary, "Emit this many boundary angles as CSV");
    auto* s_samp = spectrum->add_subcommand("sampler", "Eigenvalues of U A U* B over a unitary grid");
    add_ab(s_samp);
    s_samp->add_option("--grid", o.grid, "Angle grid")->default_val(720);
    auto* s66 = spectrum->add_subcommand("example66", "(1 + alpha E12)(1 + beta F12)");
    add_alpha_beta(s66);
    s66->add_option("--boundary", o.boundary, "Emit this many boundary angles as CSV");
    auto* s_ell = spectrum->add_subcommand("verify-ellipses", "Compare the two ellipse families");
    s_ell->add_option("--b1", o.b1, "First parameter, >= 1");
    s_ell->add_option("--b2", o.b2, "Second parameter, >= 1");
    s_ell->add_option("--raster", o.raster, "Raster size");

    auto* dec = app.add_subcommand("decompose", "Write a copy-2 matrix over h, u, v");
    dec->add_option("--B", o.b, "Copy-2 matrix as JSON");
    dec->add_flag("--evaluate", o.evaluate, "Matrix-model trace estimates of powers as JSON");
    dec->add_option("--N", o.N, "Block size")->default_val(256);
    dec->add_option("--seed", o.seed, "Seed");

    auto* mom = app.add_subcommand("moments", "tau(X^k) for X = AB or A + B");
    add_ab(mom);
    add_kind(mom);
    mom->add_option("--n", o.n, "Highest power, <= 8");

    auto* cls = app.add_subcommand("classify", "Support classification");
    add_ab(cls);
    add_kind(cls);

    auto* st = app.add_subcommand("s-transform", "S-transform of a measure on [0, inf)");
    st->add_option("--measure", o.measure, "Measure CSV file or arcsine01, arcsine_sym, dirac:x, atoms:x:m,...");
    st->add_option("--w", o.w, "Point in the domain")->required();
    st->add_flag("--numeric", o.numeric, "Force numeric inversion");

    auto* sim = app.add_subcommand("simulate", "Random-matrix eigenvalue cloud");
    add_ab(sim);
    add_kind(sim);
    sim->add_option("--N", o.N, "Block size");
    sim->add_option("--trials", o.trials, "Trials");
    sim->add_option("--seed", o.seed, "Seed");
    sim->add_option("--threads", o.threads, "Worker cap");
    sim->add_flag("--singular-values", o.singular, "Singular values instead of eigenvalues");

    auto* ver = app.add_subcommand("verify", "Acceptance suite");
    ver->add_option("--suite", o.suite, "full (everything) or exact (no Monte Carlo)");
    ver->add_option("--seed", o.seed, "Seed")->default_val(7);
    ver->add_option("--threads", o.threads, "Worker cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*b_prod) {
            emit_radial(o, fs::brown_product(fs::io::parse_matrix(o.a), fs::io::parse_matrix(o.b), o.grid));
        } else if (*b_sum) {
            emit_radial(o, fs::brown_sum_nilpotents(fs::io::parse_scalar(o.alpha), fs::io::parse_scalar(o.beta)));
        } else if (*b64) {
            const auto m = fs::brown_example_64(fs::io::parse_scalar(o.alpha), fs::io::parse_scalar(o.beta), o.grid);
            if (o.format == "json" || !m.component) {
                fs::io::write_output(o.out, dump(fs::io::mixture_summary(m)));
            } else {
                std::ostringstream ss;
                fs::io::write_radial_csv(ss, *m.component);
                fs::io::write_output(o.out, ss.str());
            }
        } else if (*b65) {
            emit_radial(o, fs::brown_example_65(fs::io::parse_scalar(o.alpha), fs::io::parse_scalar(o.beta), o.grid));
        } else if (*s_prod) {
            emit_region(o, fs::spectrum_product_traceless(fs::io::parse_matrix(o.a), fs::io::parse_matrix(o.b)));
        } else if (*s_samp) {
            const auto cloud = fs::representation_spectrum_sampler(fs::io::parse_matrix(o.a), fs::io::parse_matrix(o.b), o.grid);
            std::ostringstream ss;
            fs::io::write_points_csv(ss, cloud.points);
            fs::io::write_output(o.out, ss.str());
        } else if (*s66) {
            emit_region(o, fs::spectrum_example_66(fs::io::parse_scalar(o.alpha), fs::io::parse_scalar(o.beta)));
        } else if (*s_ell) {
            const auto c = fs::ellipse_families_equal(o.b1, o.b2, o.raster);
            json j = {{"schema", 1},
                      {"equal", c.equal},
                      {"hausdorff", fs::io::number(c.hausdorff)},
                      {"pixel", fs::io::number(c.pixel)},
                      {"mismatched_pixels", c.mismatched_pixels},
                      {"outer_first", {fs::io::number(c.outer_a1), fs::io::number(c.outer_b1)}},
                      {"outer_second", {fs::io::number(c.outer_a2), fs::io::number(c.outer_b2)}}};
            fs::io::write_output(o.out, dump(j));
        } else if (*dec) {
            run_decompose(o);
        } else if (*mom) {
            run_moments(o);
        } else if (*cls) {
            run_classify(o);
        } else if (*st) {
            run_s_transform(o);
        } else if (*sim) {
            run_simulate(o);
        } else if (*ver) {
            return run_verify(o);
        }
    } catch (const fs::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
