#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdl/numbers.hpp"

namespace qdl {

// The ambient variable universe is the ordered set {x, y, t}: two-variable
// germs live in {x, y}, disc coordinates in {t}. A VarSet is an ordered
// subset of the universe and plays the role of the variable context.
enum class Var : int { x = 0, y = 1, t = 2 };

constexpr int kVarCount = 3;

const char* var_name(Var v);
std::optional<Var> var_from_name(char c);

class VarSet {
public:
    VarSet() = default;

    static VarSet none() { return VarSet(); }
    static VarSet xy() { return VarSet(0b011); }
    static VarSet xyt() { return VarSet(0b111); }
    static VarSet only(Var v) { return VarSet(1u << static_cast<int>(v)); }

    bool contains(Var v) const { return mask_ & (1u << static_cast<int>(v)); }
    bool subset_of(VarSet o) const { return (mask_ & ~o.mask_) == 0; }
    VarSet united(VarSet o) const { return VarSet(mask_ | o.mask_); }
    VarSet with(Var v) const { return VarSet(mask_ | (1u << static_cast<int>(v))); }
    int count() const;
    bool empty() const { return mask_ == 0; }

    std::vector<Var> vars() const;
    std::string to_string() const;  // e.g. "x,y"

    friend bool operator==(VarSet a, VarSet b) { return a.mask_ == b.mask_; }
    friend bool operator!=(VarSet a, VarSet b) { return a.mask_ != b.mask_; }

private:
    explicit VarSet(unsigned mask) : mask_(mask) {}
    unsigned mask_ = 0;
};

// Exponent vector over the universe; absent variables carry exponent 0.
struct Monomial {
    std::array<std::uint32_t, kVarCount> e{0, 0, 0};

    Monomial() = default;
    Monomial(std::uint32_t ex, std::uint32_t ey, std::uint32_t et = 0) : e{ex, ey, et} {}

    static Monomial one() { return Monomial(); }
    static Monomial var(Var v, std::uint32_t k = 1) {
        Monomial m;
        m.e[static_cast<int>(v)] = k;
        return m;
    }

    std::uint32_t operator[](Var v) const { return e[static_cast<int>(v)]; }
    long total_degree() const {
        return static_cast<long>(e[0]) + static_cast<long>(e[1]) + static_cast<long>(e[2]);
    }
    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    bool divides(const Monomial& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }
    Monomial times(const Monomial& m) const {
        return Monomial(e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]);
    }
    // Requires this->divides(m).
    Monomial quotient_into(const Monomial& m) const {
        return Monomial(m.e[0] - e[0], m.e[1] - e[1], m.e[2] - e[2]);
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        return Monomial(std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]),
                        std::max(a.e[2], b.e[2]));
    }
    VarSet support_vars() const;

    // Structural order for canonical storage; term orders live in TermOrder.
    auto operator<=>(const Monomial&) const = default;
};

// GlobalDegRevLex is the usual well-order (higher total degree wins);
// LocalDegRevLex prefers lower total degree, so 1 > x > x^2 > ... and the
// leading term of a germ is a term of minimal degree.
enum class TermOrder { GlobalDegRevLex, LocalDegRevLex };

// +1 if a > b under the order, 0 if equal, -1 otherwise.
int order_cmp(TermOrder order, const Monomial& a, const Monomial& b);

struct Weights;

// Exact multivariate polynomial over Q(i) with an explicit variable context.
// Values are immutable in spirit: all operations return new polynomials.
class MPoly {
public:
    using TermMap = std::map<Monomial, GaussRational>;

    MPoly() : vars_(VarSet::none()) {}
    explicit MPoly(VarSet vars) : vars_(vars) {}

    static MPoly zero(VarSet vars) { return MPoly(vars); }
    static MPoly constant(VarSet vars, const GaussRational& c);
    static MPoly variable(Var v);
    static MPoly term(VarSet vars, const Monomial& m, const GaussRational& c);

    VarSet vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const;
    GaussRational constant_term() const;

    // Degree bookkeeping. degree_in/ord_in on the zero polynomial fail.
    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(Var v) const;
    long ord_in(Var v) const;

    MPoly embedded(VarSet vars) const;  // requires vars_ subset_of vars

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const GaussRational& c) const;
    MPoly pow(unsigned k) const;
    MPoly derivative(Var v) const;

    // Full evaluation; the point must cover every context variable.
    GaussRational evaluate(const std::vector<std::pair<Var, GaussRational>>& point) const;
    std::complex<double> evaluate_complex(Var v, std::complex<double> value) const;

    // Substitutes `value` for v; the result context is the union of the
    // remaining variables and the value's context.
    MPoly substituted(Var v, const MPoly& value) const;

    // Exact division by t^k (or any single-variable power); fails if a term
    // has a smaller exponent.
    MPoly divided_by_power(Var v, std::uint32_t k) const;

    std::pair<Monomial, GaussRational> leading_term(TermOrder order) const;  // fails on zero
    std::vector<std::pair<Monomial, GaussRational>> sorted_terms(TermOrder order) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Canonical, re-parseable rendering (GlobalDegRevLex descending).
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const GaussRational& c);
    void check_term_vars(const Monomial& m) const;

    VarSet vars_;
    TermMap terms_;
};

// Quasi-homogeneous weights for (x, y), normalized so the polynomial has
// weighted degree 1.
struct Weights {
    Rational w1;  // weight of x
    Rational w2;  // weight of y
};

Rational weighted_degree(const Monomial& m, const Weights& w);

// Solves the linear system "every support monomial has weighted degree 1".
// Returns the positive rational solution when one exists. When the system is
// underdetermined (single support point) the symmetric representative
// w1 = w2 = 1/(alpha+beta) is chosen.
std::optional<Weights> quasi_homogeneous_weights(const MPoly& f);

}  // namespace qdl
