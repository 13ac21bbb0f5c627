#include "qdl/numbers.hpp"

#include <sstream>

namespace qdl {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << rational_num(q);
    if (rational_den(q) != 1) os << "/" << rational_den(q);
    return os.str();
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) fail(ErrorKind::Domain, "zero denominator in rational literal");
        return Rational(num, den);
    } catch (const std::exception&) {
        fail(ErrorKind::Usage, "malformed rational literal: '" + text + "'");
    }
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

Int rational_floor(const Rational& q) {
    Int n = rational_num(q), d = rational_den(q);
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

std::string gauss_to_string(const GaussRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::ostringstream os;
    auto imag_part = [&](const Rational& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return rational_to_string(v) + "*i";
    };
    if (z.re == 0) return imag_part(z.im);
    os << "(" << rational_to_string(z.re);
    os << (z.im > 0 ? "+" : "-");
    Rational a = z.im > 0 ? z.im : Rational(-z.im);
    if (a == 1)
        os << "i";
    else
        os << rational_to_string(a) << "*i";
    os << ")";
    return os.str();
}

}  // namespace qdl
