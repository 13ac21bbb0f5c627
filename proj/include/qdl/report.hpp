#pragma once

#include <json.hpp>

#include <string>

#include "qdl/asymfit.hpp"
#include "qdl/local_algebra.hpp"
#include "qdl/monodromy.hpp"
#include "qdl/newton_polygon.hpp"
#include "qdl/weierstrass.hpp"

namespace qdl {

// Reports use ordered JSON so byte-for-byte reproducibility only depends on
// the inputs (and --seed where randomness is involved).
using Json = nlohmann::ordered_json;

// 17 significant digits: lossless double round-trip.
std::string format_double(double v);

Json json_rational(const Rational& q);          // exact "p/q" string
Json json_gauss(const GaussRational& z);        // {"re": "p/q", "im": "p/q"}
Json json_monomial(const Monomial& m);          // "x^2*y"
Json json_complex(Complex z);                   // {"re": 17sig, "im": 17sig}

Json json_count(const CountOrInf& c);           // integer or "infinite"
Json json_milnor(const MilnorData& d);
Json json_polygon(const NewtonPolygon& p);
Json json_monodromy(const MonodromyData& d, const Spectrum& s);
Json json_kodaira(const KodairaType& k);
Json json_fit(const FitResult& f);
Json json_scan(const ScanResult& r);

// Envelope: {"schema": "qdl/1", "command", "inputs", "results", "warnings",
// "versions"}.
Json make_report(const std::string& command, Json inputs, Json results,
                 std::vector<std::string> warnings);

}  // namespace qdl
