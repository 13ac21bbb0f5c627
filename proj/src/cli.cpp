#include "qdl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qdl/asymfit.hpp"
#include "qdl/elliptic.hpp"
#include "qdl/family_analysis.hpp"
#include "qdl/monodromy.hpp"
#include "qdl/newton_polygon.hpp"
#include "qdl/parse.hpp"
#include "qdl/report.hpp"

namespace qdl {

namespace {

struct GlobalOpts {
    bool json = false;
    std::string output;
    double tolerance = -1.0;  // negative: per-command default
    std::uint64_t seed = 0;
};

void emit(const GlobalOpts& g, std::ostream& out, const Json& report,
          const std::string& text) {
    if (g.json) {
        std::string payload = report.dump(2) + "\n";
        if (!g.output.empty()) {
            std::ofstream f(g.output);
            if (!f) fail(ErrorKind::Usage, "cannot open output file " + g.output);
            f << payload;
        } else {
            out << payload;
        }
    } else {
        if (!g.output.empty()) {
            std::ofstream f(g.output);
            if (!f) fail(ErrorKind::Usage, "cannot open output file " + g.output);
            f << text;
        } else {
            out << text;
        }
    }
}

std::vector<double> parse_radii(const std::string& spec) {
    std::vector<double> radii;
    if (spec.find(':') != std::string::npos) {
        double start, stop;
        int count;
        char c1, c2;
        std::istringstream is(spec);
        if (!(is >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':')
            fail(ErrorKind::Usage, "radii must be start:stop:count or a comma list");
        if (!(start > 0) || !(stop > 0) || count < 2 || !(start > stop))
            fail(ErrorKind::Usage, "radii require start > stop > 0 and count >= 2");
        for (int i = 0; i < count; ++i)
            radii.push_back(start * std::pow(stop / start, double(i) / (count - 1)));
    } else {
        std::istringstream is(spec);
        std::string piece;
        while (std::getline(is, piece, ',')) radii.push_back(std::stod(piece));
        for (std::size_t i = 0; i + 1 < radii.size(); ++i)
            if (!(radii[i] > radii[i + 1]))
                fail(ErrorKind::Usage, "radii list must be strictly decreasing");
        if (radii.size() < 2) fail(ErrorKind::Usage, "need at least two radii");
    }
    return radii;
}

MPoly parse_germ_xy(const std::string& text) {
    MPoly f = parse_poly(text);
    if (!f.vars().subset_of(VarSet::xy()))
        fail(ErrorKind::Domain, "expected a polynomial in x and y only");
    return f.embedded(VarSet::xy());
}

GaussRational parse_coordinate(const std::string& text) {
    MPoly p = parse_poly(text);
    if (!p.is_constant())
        fail(ErrorKind::Usage, "coordinate '" + text + "' must be a constant");
    return p.constant_term();
}

// ---------------------------------------------------------------------------

int cmd_milnor(const GlobalOpts& g, const std::string& expr, std::ostream& out) {
    MPoly f = parse_germ_xy(expr);
    MilnorData d = milnor_number(f);
    Json inputs{{"f", f.to_string()}};
    Json results = json_milnor(d);
    std::ostringstream text;
    if (d.mu.finite) {
        text << "mu = " << d.mu.value << "\n";
        text << "basis = {";
        for (std::size_t i = 0; i < d.algebra_basis.size(); ++i)
            text << (i ? ", " : "") << json_monomial(d.algebra_basis[i]).get<std::string>();
        text << "}\n";
        if (d.tjurina.finite) text << "tjurina = " << d.tjurina.value << "\n";
    } else {
        text << "mu = infinite (non-isolated singularity)\n";
    }
    emit(g, out, make_report("milnor", inputs, results, {}), text.str());
    return 0;
}

int cmd_newton(const GlobalOpts& g, const std::string& expr, std::ostream& out) {
    MPoly f = parse_germ_xy(expr);
    NewtonPolygon p = newton_polygon(f);
    Json results;
    results["polygon"] = json_polygon(p);
    std::ostringstream text;
    text << "compact edges: " << p.compact_edges.size() << ", convenient: "
         << (p.convenient ? "yes" : "no") << "\n";
    if (p.convenient) {
        long nn = newton_number(p);
        results["newton_number"] = nn;
        text << "newton number = " << nn << "\n";
    }
    bool nondeg = is_nondegenerate(f);
    results["nondegenerate"] = nondeg;
    text << "nondegenerate: " << (nondeg ? "yes" : "no") << "\n";
    if (nondeg) {
        MilnorData md = milnor_number(f);
        if (md.mu.finite) {
            BranchData bd = branch_count_and_delta(f);
            results["branch_count"] = bd.branch_count;
            results["delta"] = bd.delta;
            text << "branches r = " << bd.branch_count << ", delta = " << bd.delta << "\n";
        }
    }
    emit(g, out, make_report("newton", Json{{"f", f.to_string()}}, results, {}), text.str());
    return 0;
}

int cmd_monodromy(const GlobalOpts& g, const std::string& expr, std::ostream& out) {
    MPoly f = parse_germ_xy(expr);
    Spectrum s = spectrum_quasihomogeneous(f);
    MonodromyData d = monodromy_eigenvalues(f);
    Json results = json_monodromy(d, s);
    std::ostringstream text;
    text << "spectrum = {";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        text << (i ? ", " : "") << rational_to_string(s.values[i]);
    text << "}\nchar_poly (ascending) = [";
    for (std::size_t i = 0; i < d.char_poly.size(); ++i)
        text << (i ? ", " : "") << d.char_poly[i].str();
    text << "]\nexponents r in (0,2) = {";
    for (std::size_t i = 0; i < d.barlet_exponents.size(); ++i)
        text << (i ? ", " : "") << rational_to_string(d.barlet_exponents[i]);
    text << "}\n";
    emit(g, out, make_report("monodromy", Json{{"f", f.to_string()}}, results, {}), text.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct ModelFlags {
    std::string a1 = "0", a2 = "0", a3 = "0", a4 = "0", a6 = "0";
    std::string file;
};

WeierstrassModel model_from_flags(const ModelFlags& mf, Json* inputs) {
    std::string s1 = mf.a1, s2 = mf.a2, s3 = mf.a3, s4 = mf.a4, s6 = mf.a6;
    if (!mf.file.empty()) {
        std::ifstream f(mf.file);
        if (!f) fail(ErrorKind::Usage, "cannot open model file " + mf.file);
        Json doc = Json::parse(f, nullptr, false);
        if (doc.is_discarded() || !doc.contains("a") || !doc["a"].is_array() ||
            doc["a"].size() != 5)
            fail(ErrorKind::Usage,
                 "model file must be {\"a\": [\"a1\",\"a2\",\"a3\",\"a4\",\"a6\"]}");
        s1 = doc["a"][0].get<std::string>();
        s2 = doc["a"][1].get<std::string>();
        s3 = doc["a"][2].get<std::string>();
        s4 = doc["a"][3].get<std::string>();
        s6 = doc["a"][4].get<std::string>();
    }
    auto tp = [](const std::string& s) {
        MPoly p = parse_poly(s);
        if (!p.vars().subset_of(VarSet::only(Var::t)))
            fail(ErrorKind::Domain, "model coefficients must be polynomials in t");
        return p.embedded(VarSet::only(Var::t));
    };
    WeierstrassModel m = WeierstrassModel::make(tp(s1), tp(s2), tp(s3), tp(s4), tp(s6));
    if (inputs)
        *inputs = Json{{"a1", m.a1.to_string()},
                       {"a2", m.a2.to_string()},
                       {"a3", m.a3.to_string()},
                       {"a4", m.a4.to_string()},
                       {"a6", m.a6.to_string()}};
    return m;
}

int cmd_weierstrass(const GlobalOpts& g, const ModelFlags& mf, std::ostream& out) {
    Json inputs;
    WeierstrassModel m = model_from_flags(mf, &inputs);
    WeierstrassInvariants inv = invariants(m);
    auto [minimal, u_order] = minimalize(m);
    KodairaType k = kodaira_type(minimal);
    DeltaFCheck chk = delta_f_check(minimal);

    Json results;
    results["disc"] = inv.disc.to_string();
    results["ord_disc"] = ord0(inv.disc);
    results["c4"] = inv.c4.to_string();
    results["c6"] = inv.c6.to_string();
    results["minimal"] = Json{{"a1", minimal.a1.to_string()},
                              {"a2", minimal.a2.to_string()},
                              {"a3", minimal.a3.to_string()},
                              {"a4", minimal.a4.to_string()},
                              {"a6", minimal.a6.to_string()},
                              {"u_order", u_order},
                              {"ord_disc", ord0(invariants(minimal).disc)}};
    results["kodaira"] = json_kodaira(k);
    results["delta_f_check"] = Json{{"ord_delta", chk.ord_delta},
                                    {"mu_duval", chk.mu_duval},
                                    {"chi_fiber_diff", chk.chi_fiber_diff},
                                    {"consistent", chk.consistent}};

    std::ostringstream text;
    text << "ord_0(disc) = " << ord0(inv.disc) << " (minimal: "
         << ord0(invariants(minimal).disc) << ", u_order " << u_order << ")\n";
    text << "kodaira type = " << k.name();
    if (k.du_val)
        text << ", du Val " << k.du_val->family << k.du_val->index << " (mu = " << k.du_val->mu
             << ")";
    else
        text << ", smooth total space";
    text << "\nidentity ord(disc) = mu + chi_diff: " << chk.ord_delta << " = " << chk.mu_duval
         << " + " << chk.chi_fiber_diff << " -> " << (chk.consistent ? "pass" : "FAIL") << "\n";
    emit(g, out, make_report("weierstrass", inputs, results, {}), text.str());
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_family(const GlobalOpts& g, const std::string& file, const std::string& fexpr,
               const std::vector<std::string>& point_flags, long rank, long mu_x,
               std::optional<long> chi_diff, bool discover, long rr_genus, std::ostream& out) {
    FamilyModel fam;
    fam.rank_e = rank;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) fail(ErrorKind::Usage, "cannot open family file " + file);
        Json doc = Json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.contains("f"))
            fail(ErrorKind::Usage, "family file must contain {\"f\": \"...\"}");
        fam.f = parse_poly(doc["f"].get<std::string>());
        if (doc.contains("points"))
            for (const auto& pt : doc["points"])
                fam.singular_points.emplace_back(parse_coordinate(pt[0].get<std::string>()),
                                                 parse_coordinate(pt[1].get<std::string>()));
        if (doc.contains("rank")) fam.rank_e = doc["rank"].get<long>();
    } else {
        if (fexpr.empty()) fail(ErrorKind::Usage, "family needs --file or --f");
        fam.f = parse_poly(fexpr);
        for (const auto& p : point_flags) {
            auto comma = p.find(',');
            if (comma == std::string::npos)
                fail(ErrorKind::Usage, "--point expects \"x,y\"");
            fam.singular_points.emplace_back(parse_coordinate(p.substr(0, comma)),
                                             parse_coordinate(p.substr(comma + 1)));
        }
    }
    if (discover && fam.singular_points.empty())
        fam.singular_points = find_singular_points(fam.f);

    DegenerationReport rep = delta_f(fam, mu_x, chi_diff);

    Json inputs{{"f", fam.f.to_string()}, {"rank", fam.rank_e}, {"mu_x", mu_x}};
    Json pts = Json::array();
    for (const auto& [a, b] : fam.singular_points)
        pts.push_back(Json::array({gauss_to_string(a), gauss_to_string(b)}));
    inputs["points"] = pts;

    Json results;
    results["mu_total"] = rep.mu_total;
    results["delta_f"] = rep.delta_f;
    results["predicted_slope"] = json_rational(rep.predicted_slope);
    if (rep.chi_special) results["chi_special"] = *rep.chi_special;
    if (rep.chi_generic) results["chi_generic"] = *rep.chi_generic;
    std::ostringstream text;
    text << "mu_total = " << rep.mu_total << "\n";
    text << "delta_f = " << rep.delta_f << "\n";
    text << "predicted slope = " << rational_to_string(rep.predicted_slope) << "\n";
    if (rr_genus >= 0) {
        double c = deligne_rr_constant(rr_genus, fam.rank_e);
        results["deligne_rr_constant"] = format_double(c);
        text << "deligne rr constant (genus " << rr_genus << ") = " << format_double(c) << "\n";
    }
    emit(g, out, make_report("family", inputs, results, {}), text.str());
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_quillen_fit(const GlobalOpts& g, const ModelFlags& mf, const std::string& radii_spec,
                    int angles, const std::string& model_name, std::ostream& out,
                    std::ostream& err) {
    Json inputs;
    WeierstrassModel m0 = model_from_flags(mf, &inputs);
    auto [m, u_order] = minimalize(m0);
    double tol = g.tolerance > 0 ? g.tolerance : 1e-13;
    std::vector<double> radii = parse_radii(radii_spec);
    inputs["radii"] = radii_spec;
    inputs["angles"] = angles;
    inputs["tolerance"] = format_double(tol);
    inputs["model"] = model_name;

    SlopeModel model = SlopeModel::SlopeConst;
    if (model_name == "slope_const_loglog")
        model = SlopeModel::SlopeConstLogLog;
    else if (model_name != "slope_const")
        fail(ErrorKind::Usage, "model must be slope_const or slope_const_loglog");

    std::vector<QuillenSample> qs = sample_quillen_circles(m, radii, angles, tol);
    std::vector<Samples::Point> pts;
    std::vector<std::string> warnings;
    for (const auto& q : qs) {
        pts.push_back({q.t, q.log_quillen});
        if (q.warning) warnings.push_back(*q.warning);
    }
    Samples samples = Samples::from_points(std::move(pts), "quillen-circles");
    FitResult fit = fit_log_slope(samples, model);

    long ord_min = ord0(invariants(m).disc);
    Rational predicted(ord_min, 12);
    double c1 = fit.coefficient_for(BasisTerm::Kind::LogAbsT);

    Json results;
    results["u_order"] = u_order;
    results["ord_disc_minimal"] = ord_min;
    results["predicted_abs_slope"] = json_rational(predicted);
    results["fit"] = json_fit(fit);
    results["fitted_slope"] = format_double(c1);
    results["fitted_abs_slope"] = format_double(std::abs(c1));
    results["abs_slope_error"] =
        format_double(std::abs(std::abs(c1) - rational_to_double(predicted)));
    std::ostringstream text;
    text << "predicted |slope| = " << rational_to_string(predicted) << " ("
         << format_double(rational_to_double(predicted)) << ")\n";
    text << "fitted slope c1 = " << format_double(c1) << " (sign recorded, not asserted)\n";
    text << "| |c1| - predicted | = "
         << format_double(std::abs(std::abs(c1) - rational_to_double(predicted))) << "\n";
    text << "held-out residual rms = " << format_double(fit.residual_rms) << "\n";
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    emit(g, out, make_report("quillen-fit", inputs, results, warnings), text.str());
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_barlet_fit(const GlobalOpts& g, const std::string& fexpr, const std::string& radii_spec,
                   int angles, double contour_radius, int max_h, bool fourier,
                   const std::string& candidates_flag, std::ostream& out, std::ostream& err) {
    MPoly f = parse_germ_xy(fexpr);
    double tol = g.tolerance > 0 ? g.tolerance : 1e-5;
    std::vector<double> radii = parse_radii(radii_spec);

    Json inputs{{"f", f.to_string()},       {"radii", radii_spec},
                {"angles", angles},         {"contour_radius", format_double(contour_radius)},
                {"max_h", max_h},           {"tolerance", format_double(tol)},
                {"seed", g.seed}};

    // Candidate exponents: {r + m + m' : m + m' <= 2} u {1, 2} from the
    // monodromy exponent set when the germ is quasi-homogeneous, otherwise
    // supplied via --candidates.
    std::vector<Rational> candidates;
    std::vector<Rational> predicted;
    if (!candidates_flag.empty()) {
        std::istringstream is(candidates_flag);
        std::string piece;
        while (std::getline(is, piece, ',')) candidates.push_back(rational_from_string(piece));
    } else {
        MonodromyData md = monodromy_eigenvalues(f);
        predicted = md.barlet_exponents;
        for (const auto& r : md.barlet_exponents)
            for (int shift = 0; shift <= 2; ++shift) candidates.push_back(r + shift);
        candidates.push_back(Rational(1));
        candidates.push_back(Rational(2));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    FiberIntegrator integ(f);
    std::vector<Samples::Point> pts;
    std::vector<std::string> notes;
    for (double r : radii) {
        for (int k = 0; k < angles; ++k) {
            Complex t = std::polar(r, 2.0 * M_PI * k / angles);
            IntegralResult ir = integ.integrate(t, contour_radius, tol);
            pts.push_back({t, ir.value});
            for (auto& n : ir.notes) notes.push_back(n);
        }
    }
    Samples samples = Samples::from_points(std::move(pts), "area-circles");
    samples.notes = notes;

    ScanResult scan = exponent_scan(samples, g.seed);
    FitResult fit = fit_exponents(samples, candidates, max_h,
                                  predicted.empty() ? nullptr : &predicted);

    Json results;
    results["scan"] = json_scan(scan);
    results["fit"] = json_fit(fit);
    Json cand = Json::array();
    for (const auto& c : candidates) cand.push_back(json_rational(c));
    results["candidates"] = cand;
    if (!predicted.empty()) {
        Json p = Json::array();
        for (const auto& r : predicted) p.push_back(json_rational(r));
        results["monodromy_exponents"] = p;
    }
    if (fourier) {
        Json fj = Json::array();
        for (const auto& circle : angular_fourier(samples, std::min(4, angles / 2))) {
            Json row = Json::array();
            for (double v : circle) row.push_back(format_double(v));
            fj.push_back(row);
        }
        results["angular_fourier_magnitudes"] = fj;
    }

    std::ostringstream text;
    text << "scan exponent = " << format_double(scan.exponent) << " +/- "
         << format_double(scan.error_bar)
         << (scan.log_correction ? " (log correction flagged)" : "") << "\n";
    text << "fit (held-out rms " << format_double(fit.residual_rms) << "):\n";
    for (std::size_t i = 0; i < fit.terms.size(); ++i) {
        text << "  " << fit.terms[i].label() << " : " << format_double(fit.coefficients[i]);
        if (fit.terms[i].in_predicted_set)
            text << (*fit.terms[i].in_predicted_set ? "  [in predicted set]"
                                                    : "  [outside predicted set]");
        text << "\n";
    }
    for (const auto& n : notes) err << "note: " << n << "\n";
    emit(g, out, make_report("barlet-fit", inputs, results, notes), text.str());
    return 0;
}

Json error_report(const std::string& command, const Error& e) {
    Json j;
    j["schema"] = "qdl/1";
    j["command"] = command;
    j["error"] = Json{{"kind", e.kind_name()}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const parse_error*>(&e)) {
        j["error"]["line"] = pe->info().line;
        j["error"]["column"] = pe->info().column;
        Json exp = Json::array();
        for (const auto& s : pe->info().expected) exp.push_back(s);
        j["error"]["expected"] = exp;
    }
    return j;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Usage: return 2;
        case ErrorKind::Accuracy:
        case ErrorKind::Internal: return 3;
        default: return 1;
    }
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"singularity invariants and Quillen-metric degeneration lab"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit a JSON report");
    app.add_option("--output", g.output, "write the report to a file");
    app.add_option("--tolerance", g.tolerance, "override the command's numeric tolerance");
    app.add_option("--seed", g.seed, "seed for bootstrap resampling");
    app.fallthrough();

    std::string expr;
    auto* milnor = app.add_subcommand("milnor", "Milnor number of a plane-curve germ");
    milnor->add_option("poly", expr, "germ f(x,y)")->required();
    auto* newton = app.add_subcommand("newton", "newton polygon invariants");
    newton->add_option("poly", expr, "germ f(x,y)")->required();
    auto* monodromy = app.add_subcommand("monodromy", "monodromy spectrum and eigenvalues");
    monodromy->add_option("poly", expr, "germ f(x,y)")->required();

    ModelFlags mf;
    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--a1", mf.a1, "coefficient a1(t)");
        cmd->add_option("--a2", mf.a2, "coefficient a2(t)");
        cmd->add_option("--a3", mf.a3, "coefficient a3(t)");
        cmd->add_option("--a4", mf.a4, "coefficient a4(t)");
        cmd->add_option("--a6", mf.a6, "coefficient a6(t)");
        cmd->add_option("--file", mf.file, "JSON model file {\"a\": [...]}" );
    };
    auto* weier = app.add_subcommand("weierstrass", "discriminant, Kodaira type, du Val data");
    add_model_flags(weier);

    std::string fam_file, fam_f;
    std::vector<std::string> fam_points;
    long fam_rank = 1, fam_mux = 0, rr_genus = -1;
    long chi_diff_val = 0;
    bool discover = false;
    auto* family = app.add_subcommand("family", "total Milnor number and delta_f");
    family->add_option("--file", fam_file, "JSON family file");
    family->add_option("--f", fam_f, "family polynomial f(x,y,t)");
    family->add_option("--point", fam_points, "singular point \"x,y\" (repeatable)");
    family->add_option("--rank", fam_rank, "rank of E");
    family->add_option("--mu-x", fam_mux, "Milnor number of the total space");
    auto* chi_opt = family->add_option("--chi-diff", chi_diff_val,
                                       "explicit chi(X_0) - chi(X_t)");
    family->add_flag("--find-points", discover, "discover singular points");
    family->add_option("--rr-genus", rr_genus, "also print the Riemann-Roch constant");

    std::string radii_spec = "0.1:0.005:6", slope_model = "slope_const";
    int angles = 8;
    auto* qfit = app.add_subcommand("quillen-fit", "fit the Quillen log-norm slope");
    add_model_flags(qfit);
    qfit->add_option("--radii", radii_spec, "start:stop:count (geometric) or comma list");
    qfit->add_option("--angles", angles, "samples per circle");
    qfit->add_option("--model", slope_model, "slope_const | slope_const_loglog");

    std::string bf_f, bf_radii = "0.012:0.0015:9", bf_candidates;
    int bf_angles = 4, bf_maxh = 0;
    double bf_contour = 0.4;
    bool bf_fourier = false;
    auto* bfit = app.add_subcommand("barlet-fit", "fiber-integral exponent analysis");
    bfit->add_option("--f", bf_f, "germ f(x,y)")->required();
    bfit->add_option("--radii", bf_radii, "t-circle radii start:stop:count");
    bfit->add_option("--angles", bf_angles, "samples per circle");
    bfit->add_option("--contour-radius", bf_contour, "x-disc radius");
    bfit->add_option("--max-h", bf_maxh, "maximal log power in the basis");
    bfit->add_option("--candidates", bf_candidates, "comma list of rational exponents");
    bfit->add_flag("--fourier", bf_fourier, "include angular Fourier magnitudes");

    std::vector<const char*> argv;
    argv.push_back("qdl");
    for (const auto& a : args) argv.push_back(a.c_str());

    std::string command = args.empty() ? "" : args[0];
    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) {  // --help
                out << app.help();
                return 0;
            }
            fail(ErrorKind::Usage, e.what());
        }

        if (milnor->parsed()) return cmd_milnor(g, expr, out);
        if (newton->parsed()) return cmd_newton(g, expr, out);
        if (monodromy->parsed()) return cmd_monodromy(g, expr, out);
        if (weier->parsed()) return cmd_weierstrass(g, mf, out);
        if (family->parsed())
            return cmd_family(g, fam_file, fam_f, fam_points, fam_rank, fam_mux,
                              chi_opt->count() ? std::optional<long>(chi_diff_val) : std::nullopt,
                              discover, rr_genus, out);
        if (qfit->parsed())
            return cmd_quillen_fit(g, mf, radii_spec, angles, slope_model, out, err);
        if (bfit->parsed())
            return cmd_barlet_fit(g, bf_f, bf_radii, bf_angles, bf_contour, bf_maxh, bf_fourier,
                                  bf_candidates, out, err);
        fail(ErrorKind::Usage, "no subcommand given");
    } catch (const Error& e) {
        err << "error (" << e.kind_name() << "): " << e.what() << "\n";
        if (g.json) out << error_report(command, e).dump(2) << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (g.json) {
            Json j{{"schema", "qdl/1"},
                   {"command", command},
                   {"error", Json{{"kind", "internal"}, {"message", e.what()}}}};
            out << j.dump(2) << "\n";
        }
        return 3;
    }
}

}  // namespace qdl
