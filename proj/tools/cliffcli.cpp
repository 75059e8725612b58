// Command-line front end: parses inputs, dispatches to the library, and
// persists results as versioned JSON documents.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cliff/acceptance.hpp"
#include "cliff/io.hpp"

namespace {

using cliff::Json;

struct RunConfig {
    int m = 1;
    std::string mode = "exact"; // exact | float
    int threads = 1;
    std::string output;
    std::uint64_t seed = 20240901;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    return out;
}

cliff::MultiIndex parse_multi_index(const std::string& s, int m) {
    cliff::MultiIndex a;
    for (const std::string& p : split_commas(s)) {
        try {
            a.push_back(std::stoi(p));
        } catch (const std::exception&) {
            throw cliff::parse_error("bad multi-index entry: " + p);
        }
        if (a.back() < 0) throw cliff::parse_error("negative multi-index entry");
    }
    if (static_cast<int>(a.size()) != cliff::num_axes(m))
        throw cliff::parse_error("multi-index needs 2m+2 comma-separated entries");
    return a;
}

std::vector<cliff::Rational> parse_rational_point(const std::string& s, int m) {
    std::vector<cliff::Rational> v;
    for (const std::string& p : split_commas(s)) v.push_back(cliff::parse_rational(p));
    if (static_cast<int>(v.size()) != cliff::num_axes(m))
        throw cliff::parse_error("point needs 2m+2 comma-separated entries");
    return v;
}

std::vector<double> parse_double_point(const std::string& s, int m) {
    std::vector<double> v;
    for (const cliff::Rational& q : parse_rational_point(s, m)) v.push_back(cliff::to_double(q));
    return v;
}

Json make_doc(const std::string& command, const RunConfig& cfg) {
    Json doc;
    doc["schema_version"] = cliff::schema_version;
    doc["command"] = command;
    doc["m"] = cfg.m;
    doc["mode"] = cfg.mode;
    doc["seed"] = cfg.seed;
    return doc;
}

void emit(const Json& doc, const RunConfig& cfg, const std::string& summary) {
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw cliff::resource_limit("cannot open output file: " + cfg.output);
        out << doc.dump(2) << "\n";
        std::cout << summary << " -> " << cfg.output << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

Json polynomial_doc(const cliff::MvPolynomial<cliff::Rational>& p, const RunConfig& cfg) {
    if (cfg.mode == "float") return cliff::polynomial_to_json(cliff::to_float(p));
    return cliff::polynomial_to_json(p);
}

Json ratfun_doc(const cliff::RatFun<cliff::Rational>& f, const RunConfig& cfg) {
    if (cfg.mode == "float") return cliff::ratfun_to_json(cliff::to_float(f));
    return cliff::ratfun_to_json(f);
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cliff::parse_error("cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw cliff::parse_error(std::string("bad JSON input: ") + e.what());
    }
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Holomorphic Cliffordian function toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    RunConfig cfg;
    app.add_option("-m,--m", cfg.m, "algebra parameter m (algebra R_{0,2m+1})")
        ->check(CLI::Range(0, 2));
    app.add_option("--mode", cfg.mode, "scalar mode for serialized values")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--threads", cfg.threads, "worker thread count")
        ->envname("CLIFF_THREADS")
        ->check(CLI::PositiveNumber);
    app.add_option("-o,--output", cfg.output, "write the result document to this file");
    app.add_option("--seed", cfg.seed, "seed for randomized runs, recorded in every document");

    // palpha
    auto* c_palpha = app.add_subcommand("palpha", "construct the polynomial solution P_alpha");
    std::string opt_alpha;
    c_palpha->add_option("--alpha", opt_alpha, "multi-index, e.g. 1,1,0,0")->required();

    // sbeta
    auto* c_sbeta = app.add_subcommand("sbeta", "construct the singular solution S_beta");
    std::string opt_beta;
    c_sbeta->add_option("--beta", opt_beta, "multi-index, e.g. 0,2,0,0")->required();

    // verify
    auto* c_verify = app.add_subcommand("verify", "check D Delta^m f = 0 for a serialized f");
    std::string opt_input;
    c_verify->add_option("--input", opt_input, "document produced by palpha/sbeta")->required();

    // space-check
    auto* c_space = app.add_subcommand("space-check", "kernel vs P_alpha span comparison");
    int opt_d = 3;
    c_space->add_option("-d,--degree", opt_d, "polynomial degree bound")->required();

    // cauchy-check
    auto* c_cauchy = app.add_subcommand("cauchy-check", "boundary-integral reconstruction of P_alpha");
    std::string opt_center = "0,0,0,0", opt_point, opt_convention = "mixed";
    double opt_radius = 1.0;
    int opt_level = 8;
    c_cauchy->add_option("--alpha", opt_alpha, "multi-index of the test function")->required();
    c_cauchy->add_option("--center", opt_center, "ball center");
    c_cauchy->add_option("--radius", opt_radius, "ball radius")->check(CLI::PositiveNumber);
    c_cauchy->add_option("--point", opt_point, "interior evaluation point")->required();
    c_cauchy->add_option("--level", opt_level, "quadrature level")->check(CLI::PositiveNumber);
    c_cauchy->add_option("--convention", opt_convention, "mixed | scalar | mixed-fn");

    // calibrate
    auto* c_cal = app.add_subcommand("calibrate", "measure lambda under each measure convention");
    c_cal->add_option("--center", opt_center, "ball center");
    c_cal->add_option("--radius", opt_radius, "ball radius")->check(CLI::PositiveNumber);
    c_cal->add_option("--level", opt_level, "quadrature level")->check(CLI::PositiveNumber);

    // taylor-fit
    auto* c_taylor = app.add_subcommand("taylor-fit", "expand a polynomial in the P_alpha family");
    std::string opt_tcenter = "0,0,0,0";
    int opt_dmax = 3;
    c_taylor->add_option("--input", opt_input, "serialized polynomial document")->required();
    c_taylor->add_option("--center", opt_tcenter, "expansion center a");
    c_taylor->add_option("--dmax", opt_dmax, "degree bound");

    // laurent-fit
    auto* c_laurent = app.add_subcommand("laurent-fit", "joint P_alpha/S_beta expansion");
    int opt_bmax = 3;
    c_laurent->add_option("--input", opt_input, "serialized function document")->required();
    c_laurent->add_option("--dmax", opt_dmax, "polynomial index bound");
    c_laurent->add_option("--bmax", opt_bmax, "singular index bound");

    // zeta
    auto* c_zeta = app.add_subcommand("zeta", "truncated Cliffordian Weierstrass zeta");
    std::string opt_x, opt_periods;
    double opt_zradius = 6.7;
    c_zeta->add_option("--x", opt_x, "evaluation point")->required();
    c_zeta->add_option("--radius", opt_zradius, "truncation radius")->check(CLI::PositiveNumber);
    c_zeta->add_option("--periods", opt_periods,
                       "JSON file with the 2m+2 periods (rows of rationals); default cubic");

    // zeta-periodicity
    auto* c_zper = app.add_subcommand("zeta-periodicity", "periodicity defect decay of zeta derivatives");
    int opt_order = 4, opt_pindex = 0, opt_axis = 0;
    c_zper->add_option("--x", opt_x, "evaluation point")->required();
    c_zper->add_option("--radius", opt_zradius, "base truncation radius")->check(CLI::PositiveNumber);
    c_zper->add_option("--order", opt_order, "derivative order");
    c_zper->add_option("--period-index", opt_pindex, "which period to shift by");
    c_zper->add_option("--axis", opt_axis, "derivative axis");
    c_zper->add_option("--periods", opt_periods, "JSON file with the periods; default cubic");

    // acceptance
    auto* c_accept = app.add_subcommand("acceptance", "run the acceptance criteria");

    // global options (-m, -o, --seed, ...) may appear after the subcommand
    for (CLI::App* sub : {c_palpha, c_sbeta, c_verify, c_space, c_cauchy, c_cal, c_taylor,
                          c_laurent, c_zeta, c_zper, c_accept})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto load_lattice = [&]() {
        cliff::Lattice lat = cliff::cubic_lattice(cfg.m);
        if (!opt_periods.empty()) {
            Json j = load_json(opt_periods);
            lat.periods.clear();
            for (const Json& row : j) {
                std::vector<cliff::Rational> p;
                for (const Json& v : row) p.push_back(cliff::scalar_from_json<cliff::Rational>(v));
                lat.periods.push_back(p);
            }
        }
        lat.validate();
        return lat;
    };

    if (c_palpha->parsed()) {
        cliff::MultiIndex alpha = parse_multi_index(opt_alpha, cfg.m);
        cliff::MvPolynomial<cliff::Rational> p = cliff::p_alpha(alpha, cfg.m);
        Json doc = make_doc("palpha", cfg);
        doc["alpha"] = alpha;
        doc["polynomial"] = polynomial_doc(p, cfg);
        doc["degree"] = p.degree();
        emit(doc, cfg, "P_alpha of degree " + std::to_string(p.degree()));
    } else if (c_sbeta->parsed()) {
        cliff::MultiIndex beta = parse_multi_index(opt_beta, cfg.m);
        cliff::RatFun<cliff::Rational> s = cliff::s_beta(beta, cfg.m);
        Json doc = make_doc("sbeta", cfg);
        doc["beta"] = beta;
        doc["ratfun"] = ratfun_doc(s, cfg);
        emit(doc, cfg, "S_beta with pole order " + std::to_string(s.max_pole_order()));
    } else if (c_verify->parsed()) {
        Json in = load_json(opt_input);
        bool zero = false;
        if (in.contains("ratfun")) {
            auto f = cliff::ratfun_from_json<cliff::Rational>(in.at("ratfun"));
            zero = cliff::lhc_residual(f, cfg.m).is_identically_zero();
        } else if (in.contains("polynomial")) {
            auto f = cliff::polynomial_from_json<cliff::Rational>(in.at("polynomial"));
            zero = cliff::lhc_residual(f, cfg.m).is_zero();
        } else {
            throw cliff::parse_error("input document has neither polynomial nor ratfun");
        }
        Json doc = make_doc("verify", cfg);
        doc["residual_zero"] = zero;
        emit(doc, cfg, std::string("residual_zero: ") + (zero ? "true" : "false"));
        return zero ? 0 : 1;
    } else if (c_space->parsed()) {
        cliff::SpaceCompareReport rep = cliff::solution_space_compare(opt_d, cfg.m);
        Json doc = make_doc("space-check", cfg);
        doc["d"] = rep.d;
        doc["kernel_dim"] = rep.kernel_dim;
        doc["span_rank"] = rep.span_rank;
        doc["spans_equal"] = rep.spans_equal;
        emit(doc, cfg,
             "kernel_dim=" + std::to_string(rep.kernel_dim) +
                 " span_rank=" + std::to_string(rep.span_rank));
    } else if (c_cauchy->parsed()) {
        cliff::MultiIndex alpha = parse_multi_index(opt_alpha, cfg.m);
        cliff::Ball ball{parse_double_point(opt_center, cfg.m), opt_radius};
        std::vector<double> x = parse_double_point(opt_point, cfg.m);
        cliff::MeasureConvention conv = cliff::convention_from_string(opt_convention);
        cliff::MvPolynomial<cliff::Rational> f = cliff::p_alpha(alpha, cfg.m);
        cliff::ReconstructResult rec =
            cliff::cauchy_reconstruct(f, ball, x, cfg.m, opt_level, conv);
        cliff::Multivector<double> fx = cliff::to_float(f).eval(x);
        double lambda = 0.0;
        if (cliff::to_double(fx.norm_sq()) > 1e-20) {
            double dot = 0.0;
            for (int b = 0; b < fx.dim(); ++b)
                dot += rec.value[static_cast<cliff::BladeMask>(b)] *
                       fx[static_cast<cliff::BladeMask>(b)];
            lambda = dot / cliff::to_double(fx.norm_sq());
        }
        double norm_defect = rec.defect;
        if (lambda != 0.0)
            norm_defect = (rec.value * (1.0 / lambda) - fx).norm() / std::max(1.0, fx.norm());
        Json doc = make_doc("cauchy-check", cfg);
        doc["convention"] = cliff::to_string(conv);
        doc["level"] = opt_level;
        doc["value"] = cliff::multivector_to_json(rec.value);
        doc["expected"] = cliff::multivector_to_json(fx);
        doc["lambda"] = lambda;
        doc["defect"] = norm_defect;
        std::ostringstream os;
        os << "lambda=" << lambda << " defect=" << norm_defect;
        emit(doc, cfg, os.str());
    } else if (c_cal->parsed()) {
        cliff::Ball ball{parse_double_point(opt_center, cfg.m), opt_radius};
        std::vector<cliff::MvPolynomial<cliff::Rational>> fs;
        for (const cliff::MultiIndex& alpha :
             cliff::multi_indices_up_to(cliff::num_axes(cfg.m), 1, 2))
            fs.push_back(cliff::p_alpha(alpha, cfg.m));
        std::vector<std::vector<double>> points;
        {
            cliff::Rng rng(cfg.seed);
            while (points.size() < 3) {
                std::vector<double> x(cliff::num_axes(cfg.m));
                double n = 0.0;
                // stay well inside the ball: near the boundary the kernel
                // peaks and low quadrature levels lose the constant lambda
                for (double& v : x) {
                    v = rng.uniform(-0.25, 0.25) * opt_radius;
                    n += v * v;
                }
                if (std::sqrt(n) > 0.05 * opt_radius && std::sqrt(n) < 0.45 * opt_radius) {
                    for (int i = 0; i < cliff::num_axes(cfg.m); ++i) x[i] += ball.center[i];
                    points.push_back(x);
                }
            }
        }
        cliff::CalibrationReport rep = cliff::calibration_scan(
            fs, points, ball, cfg.m, opt_level,
            {cliff::MeasureConvention::mixed, cliff::MeasureConvention::scalar,
             cliff::MeasureConvention::mixed_fn});
        Json doc = make_doc("calibrate", cfg);
        doc["level"] = opt_level;
        Json entries = Json::array();
        for (const cliff::CalibrationEntry& e : rep.entries)
            entries.push_back({{"convention", cliff::to_string(e.convention)},
                               {"lambda_mean", e.lambda_mean},
                               {"spread", e.spread},
                               {"lambdas", e.lambdas}});
        doc["entries"] = entries;
        doc["has_accepted"] = rep.has_accepted;
        if (rep.has_accepted) {
            doc["accepted"] = cliff::to_string(rep.accepted);
            doc["accepted_lambda"] = rep.accepted_lambda;
        }
        std::ostringstream os;
        if (rep.has_accepted)
            os << "accepted convention " << cliff::to_string(rep.accepted)
               << " with lambda=" << rep.accepted_lambda;
        else
            os << "no convention reached constant lambda";
        emit(doc, cfg, os.str());
    } else if (c_taylor->parsed()) {
        Json in = load_json(opt_input);
        if (!in.contains("polynomial")) throw cliff::parse_error("input lacks a polynomial");
        auto f = cliff::polynomial_from_json<cliff::Rational>(in.at("polynomial"));
        std::vector<cliff::Rational> a = parse_rational_point(opt_tcenter, cfg.m);
        cliff::TaylorFit fit = cliff::taylor_fit(f, a, opt_dmax, cfg.m);
        Json doc = make_doc("taylor-fit", cfg);
        Json coeffs = Json::array();
        for (const auto& [alpha, c] : fit.coeffs)
            coeffs.push_back({{"alpha", alpha}, {"coeff", cliff::multivector_to_json(c)}});
        doc["coefficients"] = coeffs;
        doc["consistent"] = fit.consistent;
        doc["residual_zero"] = fit.residual_zero;
        emit(doc, cfg,
             std::string("residual_zero: ") + (fit.residual_zero ? "true" : "false"));
    } else if (c_laurent->parsed()) {
        Json in = load_json(opt_input);
        cliff::RatFun<cliff::Rational> f(cfg.m);
        if (in.contains("ratfun"))
            f = cliff::ratfun_from_json<cliff::Rational>(in.at("ratfun"));
        else if (in.contains("polynomial"))
            f = cliff::RatFun<cliff::Rational>::from_polynomial(
                cliff::polynomial_from_json<cliff::Rational>(in.at("polynomial")));
        else
            throw cliff::parse_error("input document has neither polynomial nor ratfun");
        cliff::LaurentFit fit = cliff::laurent_fit(f, opt_dmax, opt_bmax, cfg.m);
        Json doc = make_doc("laurent-fit", cfg);
        Json ca = Json::array(), db = Json::array();
        for (const auto& [alpha, c] : fit.c_alpha)
            ca.push_back({{"alpha", alpha}, {"coeff", cliff::multivector_to_json(c)}});
        for (const auto& [beta, c] : fit.d_beta)
            db.push_back({{"beta", beta}, {"coeff", cliff::multivector_to_json(c)}});
        doc["c_alpha"] = ca;
        doc["d_beta"] = db;
        doc["residual_zero"] = fit.residual_zero;
        emit(doc, cfg,
             std::string("residual_zero: ") + (fit.residual_zero ? "true" : "false"));
    } else if (c_zeta->parsed()) {
        cliff::Lattice lat = load_lattice();
        std::vector<double> x = parse_double_point(opt_x, cfg.m);
        cliff::ZetaValue<double> z = cliff::zeta_truncated<double>(x, lat, opt_zradius);
        Json doc = make_doc("zeta", cfg);
        doc["radius"] = opt_zradius;
        doc["value"] = cliff::multivector_to_json(z.value);
        doc["tail_estimate"] = z.tail_estimate;
        std::ostringstream os;
        os << "zeta truncated at R=" << opt_zradius << ", tail<=" << z.tail_estimate;
        emit(doc, cfg, os.str());
    } else if (c_zper->parsed()) {
        cliff::Lattice lat = load_lattice();
        std::vector<double> x = parse_double_point(opt_x, cfg.m);
        cliff::PeriodicityResult p1 =
            cliff::periodicity_check(x, lat, opt_zradius, opt_pindex, opt_axis, opt_order);
        cliff::PeriodicityResult p2 =
            cliff::periodicity_check(x, lat, 2 * opt_zradius, opt_pindex, opt_axis, opt_order);
        Json doc = make_doc("zeta-periodicity", cfg);
        doc["order"] = opt_order;
        doc["period_index"] = opt_pindex;
        doc["axis"] = opt_axis;
        doc["radii"] = {opt_zradius, 2 * opt_zradius};
        doc["defect"] = {p1.defect, p2.defect};
        doc["decay_ratio"] = p2.defect / p1.defect;
        std::ostringstream os;
        os << "defect " << p1.defect << " -> " << p2.defect
           << " (ratio " << p2.defect / p1.defect << ")";
        emit(doc, cfg, os.str());
    } else if (c_accept->parsed()) {
        std::vector<cliff::CriterionResult> results = cliff::run_acceptance(cfg.seed);
        bool all = true;
        Json arr = Json::array();
        for (const cliff::CriterionResult& c : results) {
            std::cout << "criterion " << c.id << " [" << c.name << "]: "
                      << (c.passed ? "PASS" : "FAIL") << " — " << c.detail << "\n";
            all = all && c.passed;
            arr.push_back({{"id", c.id},
                           {"name", c.name},
                           {"passed", c.passed},
                           {"detail", c.detail}});
        }
        Json doc = make_doc("acceptance", cfg);
        doc["criteria"] = arr;
        doc["all_passed"] = all;
        if (!cfg.output.empty()) emit(doc, cfg, all ? "all criteria passed" : "FAILURES present");
        return all ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const cliff::parse_error& e) {
        std::cerr << "error [parse]: " << e.what() << "\n";
        return 2;
    } catch (const cliff::resource_limit& e) {
        std::cerr << "error [resource]: " << e.what() << "\n";
        return 4;
    } catch (const cliff::domain_error& e) {
        std::cerr << "error [domain]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
