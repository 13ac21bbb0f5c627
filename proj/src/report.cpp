#include "qdl/report.hpp"

#include <cstdio>

namespace qdl {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json json_rational(const Rational& q) { return rational_to_string(q); }

Json json_gauss(const GaussRational& z) {
    Json j;
    j["re"] = rational_to_string(z.re);
    j["im"] = rational_to_string(z.im);
    return j;
}

Json json_monomial(const Monomial& m) {
    std::string s;
    for (int i = 0; i < kVarCount; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(static_cast<Var>(i));
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

Json json_complex(Complex z) {
    Json j;
    j["re"] = format_double(z.real());
    j["im"] = format_double(z.imag());
    return j;
}

Json json_count(const CountOrInf& c) {
    if (!c.finite) return "infinite";
    return c.value;
}

Json json_milnor(const MilnorData& d) {
    Json j;
    j["mu"] = json_count(d.mu);
    Json basis = Json::array();
    for (const auto& m : d.algebra_basis) basis.push_back(json_monomial(m));
    j["algebra_basis"] = basis;
    j["tjurina"] = json_count(d.tjurina);
    return j;
}

Json json_polygon(const NewtonPolygon& p) {
    Json j;
    auto pts = [](const std::vector<LatticePoint>& v) {
        Json a = Json::array();
        for (const auto& q : v) a.push_back(Json::array({q.a, q.b}));
        return a;
    };
    j["support"] = pts(p.support);
    j["vertices"] = pts(p.vertices);
    Json edges = Json::array();
    for (const auto& e : p.compact_edges) {
        Json je;
        je["from"] = Json::array({e.from.a, e.from.b});
        je["to"] = Json::array({e.to.a, e.to.b});
        je["primitive_direction"] = Json::array({e.dir_a, e.dir_b});
        je["lattice_length"] = e.lattice_length;
        edges.push_back(je);
    }
    j["compact_edges"] = edges;
    j["convenient"] = p.convenient;
    if (p.convenient) {
        j["x_intercept"] = p.x_intercept;
        j["y_intercept"] = p.y_intercept;
    }
    return j;
}

Json json_monodromy(const MonodromyData& d, const Spectrum& s) {
    Json j;
    Json spec = Json::array();
    for (const auto& v : s.values) spec.push_back(json_rational(v));
    j["spectrum"] = spec;
    Json args = Json::array();
    for (const auto& v : d.eigenvalue_args) args.push_back(json_rational(v));
    j["eigenvalue_args"] = args;
    Json cp = Json::array();
    for (const auto& c : d.char_poly) cp.push_back(c.str());
    j["char_poly_ascending"] = cp;
    Json rset = Json::array();
    for (const auto& r : d.barlet_exponents) rset.push_back(json_rational(r));
    j["exponents"] = rset;
    j["unit_eigenvalue_count"] = d.unit_eigenvalue_count;
    return j;
}

Json json_kodaira(const KodairaType& k) {
    Json j;
    j["type"] = k.name();
    j["euler_number"] = k.euler_number;
    if (k.du_val) {
        Json dv;
        dv["label"] = std::string(1, k.du_val->family) + std::to_string(k.du_val->index);
        dv["mu"] = k.du_val->mu;
        j["du_val"] = dv;
    } else {
        j["du_val"] = nullptr;
    }
    return j;
}

Json json_fit(const FitResult& f) {
    Json j;
    Json terms = Json::array();
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        Json t;
        t["term"] = f.terms[i].label();
        t["coefficient"] = format_double(f.coefficients[i]);
        if (f.terms[i].in_predicted_set.has_value())
            t["in_predicted_set"] = *f.terms[i].in_predicted_set;
        terms.push_back(t);
    }
    j["terms"] = terms;
    j["residual_rms_heldout"] = format_double(f.residual_rms);
    j["condition_estimate"] = format_double(f.condition_estimate);
    return j;
}

Json json_scan(const ScanResult& r) {
    Json j;
    j["exponent"] = format_double(r.exponent);
    j["error_bar"] = format_double(r.error_bar);
    j["log_correction"] = r.log_correction;
    return j;
}

Json make_report(const std::string& command, Json inputs, Json results,
                 std::vector<std::string> warnings) {
    Json j;
    j["schema"] = "qdl/1";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["warnings"] = warnings;
    j["versions"] = Json{{"qdl", "0.1.0"}};
    return j;
}

}  // namespace qdl
