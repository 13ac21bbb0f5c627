#include "qdl/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qdl {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::t: return "t";
    }
    return "?";
}

std::optional<Var> var_from_name(char c) {
    switch (c) {
        case 'x': return Var::x;
        case 'y': return Var::y;
        case 't': return Var::t;
        default: return std::nullopt;
    }
}

int VarSet::count() const {
    int n = 0;
    for (unsigned m = mask_; m; m >>= 1) n += static_cast<int>(m & 1u);
    return n;
}

std::vector<Var> VarSet::vars() const {
    std::vector<Var> out;
    for (int i = 0; i < kVarCount; ++i)
        if (mask_ & (1u << i)) out.push_back(static_cast<Var>(i));
    return out;
}

std::string VarSet::to_string() const {
    std::string s;
    for (Var v : vars()) {
        if (!s.empty()) s += ",";
        s += var_name(v);
    }
    return s;
}

VarSet Monomial::support_vars() const {
    VarSet s;
    for (int i = 0; i < kVarCount; ++i)
        if (e[i] > 0) s = s.with(static_cast<Var>(i));
    return s;
}

int order_cmp(TermOrder order, const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) {
        bool a_bigger = (order == TermOrder::GlobalDegRevLex) ? (da > db) : (da < db);
        return a_bigger ? 1 : -1;
    }
    // Shared revlex tie-break: the last differing exponent decides, smaller wins.
    for (int i = kVarCount - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

void MPoly::check_term_vars(const Monomial& m) const {
    if (!m.support_vars().subset_of(vars_))
        fail(ErrorKind::Internal, "monomial outside the polynomial's variable context");
}

void MPoly::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    check_term_vars(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::constant(VarSet vars, const GaussRational& c) {
    MPoly p(vars);
    p.add_term(Monomial::one(), c);
    return p;
}

MPoly MPoly::variable(Var v) {
    MPoly p(VarSet::only(v));
    p.add_term(Monomial::var(v), GaussRational(1));
    return p;
}

MPoly MPoly::term(VarSet vars, const Monomial& m, const GaussRational& c) {
    MPoly p(vars);
    p.add_term(m, c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussRational MPoly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? GaussRational(0) : it->second;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

long MPoly::degree_in(Var v) const {
    if (is_zero()) fail(ErrorKind::Domain, "degree of the zero polynomial");
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[v]));
    return d;
}

long MPoly::ord_in(Var v) const {
    if (is_zero()) fail(ErrorKind::Domain, "vanishing order of the zero polynomial");
    long d = -1;
    for (const auto& [m, c] : terms_) {
        long e = static_cast<long>(m[v]);
        d = (d < 0) ? e : std::min(d, e);
    }
    return d;
}

MPoly MPoly::embedded(VarSet vars) const {
    // Re-contexting is allowed whenever every term fits; the declared
    // context may shrink to the support.
    VarSet support;
    for (const auto& [m, c] : terms_) support = support.united(m.support_vars());
    if (!support.subset_of(vars))
        fail(ErrorKind::Domain, "variable-context mismatch: support {" + support.to_string() +
                                    "} does not embed into {" + vars.to_string() + "}");
    MPoly p(vars);
    p.terms_ = terms_;
    return p;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r(a.vars_.united(b.vars_));
    r.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

MPoly operator-(const MPoly& a) {
    MPoly r(a.vars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.vars_.united(b.vars_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

MPoly MPoly::scaled(const GaussRational& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r = MPoly::constant(vars_, GaussRational(1));
    MPoly base = *this;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m[v];
        if (e == 0) continue;
        Monomial n = m;
        n.e[static_cast<int>(v)] = e - 1;
        r.add_term(n, c * GaussRational(Rational(e)));
    }
    return r;
}

GaussRational MPoly::evaluate(const std::vector<std::pair<Var, GaussRational>>& point) const {
    std::array<std::optional<GaussRational>, kVarCount> vals;
    for (const auto& [v, c] : point) vals[static_cast<int>(v)] = c;
    for (Var v : vars_.vars())
        if (!vals[static_cast<int>(v)])
            fail(ErrorKind::Domain,
                 std::string("evaluation point does not cover variable ") + var_name(v));
    GaussRational acc(0);
    for (const auto& [m, c] : terms_) {
        GaussRational term = c;
        for (int i = 0; i < kVarCount; ++i) {
            for (std::uint32_t k = 0; k < m.e[i]; ++k) term *= *vals[i];
        }
        acc += term;
    }
    return acc;
}

std::complex<double> MPoly::evaluate_complex(Var v, std::complex<double> value) const {
    for (const auto& [m, c] : terms_)
        if (!m.support_vars().subset_of(VarSet::only(v)))
            fail(ErrorKind::Domain, "numeric evaluation expects a univariate polynomial");
    // Horner over the single variable.
    long deg = is_zero() ? 0 : degree_in(v);
    std::vector<std::complex<double>> coeff(static_cast<std::size_t>(deg) + 1, {0.0, 0.0});
    for (const auto& [m, c] : terms_) coeff[m[v]] = c.to_complex();
    std::complex<double> acc{0.0, 0.0};
    for (long k = deg; k >= 0; --k) acc = acc * value + coeff[static_cast<std::size_t>(k)];
    return acc;
}

MPoly MPoly::substituted(Var v, const MPoly& value) const {
    VarSet rest;
    for (Var w : vars_.vars())
        if (w != v) rest = rest.with(w);
    MPoly r = MPoly::zero(rest.united(value.vars()));

    // Group by exponent of v and apply Horner to keep the work modest.
    std::map<std::uint32_t, MPoly> layers;
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        std::uint32_t e = m[v];
        n.e[static_cast<int>(v)] = 0;
        auto [it, inserted] = layers.try_emplace(e, MPoly(rest));
        it->second.add_term(n, c);
    }
    if (layers.empty()) return r;
    std::uint32_t top = layers.rbegin()->first;
    for (std::uint32_t e = top;; --e) {
        r = r * value;
        auto it = layers.find(e);
        if (it != layers.end()) r += it->second.embedded(r.vars().united(rest));
        if (e == 0) break;
    }
    return r;
}

MPoly MPoly::divided_by_power(Var v, std::uint32_t k) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[v] < k)
            fail(ErrorKind::Domain, std::string("term not divisible by ") + var_name(v) + "^" +
                                        std::to_string(k));
        Monomial n = m;
        n.e[static_cast<int>(v)] = m[v] - k;
        r.terms_.emplace(n, c);
    }
    return r;
}

std::pair<Monomial, GaussRational> MPoly::leading_term(TermOrder order) const {
    if (is_zero()) fail(ErrorKind::Domain, "leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order_cmp(order, it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

std::vector<std::pair<Monomial, GaussRational>> MPoly::sorted_terms(TermOrder order) const {
    std::vector<std::pair<Monomial, GaussRational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [order](const auto& a, const auto& b) {
        return order_cmp(order, a.first, b.first) > 0;
    });
    return out;
}

std::string MPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms(TermOrder::GlobalDegRevLex)) {
        // Render coefficient together with a leading +/- where possible.
        std::string mono;
        for (int i = 0; i < kVarCount; ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(static_cast<Var>(i));
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            Rational r = c.re;
            negative = r < 0;
            Rational a = negative ? Rational(-r) : r;
            if (a != 1 || mono.empty()) coeff = rational_to_string(a);
        } else if (c.re == 0) {
            negative = c.im < 0;
            Rational a = negative ? Rational(-c.im) : c.im;
            coeff = (a == 1) ? "i" : rational_to_string(a) + "*i";
        } else {
            coeff = gauss_to_string(c);  // parenthesized a+bi
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (!coeff.empty()) {
            os << coeff;
            if (!mono.empty()) os << "*";
        }
        os << mono;
    }
    return os.str();
}

Rational weighted_degree(const Monomial& m, const Weights& w) {
    if (m[Var::t] != 0)
        fail(ErrorKind::Internal, "weighted degree is defined for monomials in x, y only");
    return Rational(m[Var::x]) * w.w1 + Rational(m[Var::y]) * w.w2;
}

std::optional<Weights> quasi_homogeneous_weights(const MPoly& f) {
    if (f.is_zero()) fail(ErrorKind::Domain, "quasi-homogeneous weights of the zero polynomial");
    if (!f.vars().subset_of(VarSet::xy()))
        fail(ErrorKind::Domain, "quasi-homogeneous weights expect a polynomial in x, y");
    if (!f.constant_term().is_zero()) return std::nullopt;

    std::vector<std::pair<Rational, Rational>> rows;  // alpha * w1 + beta * w2 = 1
    for (const auto& [m, c] : f.terms())
        rows.emplace_back(Rational(m[Var::x]), Rational(m[Var::y]));

    if (rows.size() == 1) {
        // One support point: the system is underdetermined; pick w1 = w2.
        Rational s = rows[0].first + rows[0].second;
        if (s == 0) return std::nullopt;
        Rational w = Rational(1) / s;
        if (w <= 0) return std::nullopt;
        return Weights{w, w};
    }

    // Find two independent rows and solve exactly.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            Rational det = rows[i].first * rows[j].second - rows[j].first * rows[i].second;
            if (det == 0) continue;
            Rational w1 = (rows[j].second - rows[i].second) / det;
            Rational w2 = (rows[i].first - rows[j].first) / det;
            if (w1 <= 0 || w2 <= 0) return std::nullopt;
            for (const auto& [a, b] : rows)
                if (a * w1 + b * w2 != 1) return std::nullopt;
            return Weights{w1, w2};
        }
    }
    // All rows pairwise dependent with right-hand side 1: inconsistent unless
    // the rows coincide, which the size-1 branch already covered.
    return std::nullopt;
}

}  // namespace qdl
