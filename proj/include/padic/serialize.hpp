#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include <json.hpp>

#include "padic/zeta.hpp"

namespace padic {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"p","valuation","digits","precision"}; zero as {"p","zero":true,"known_to"}
// with known_to null for an exact zero.
Json to_json(const PadicNumber& x);
PadicNumber padic_from_json(const Json& j);

// {"basis":"mahler"|"vdp","p","M","coefficients","tail_bound_exponent"}; the
// exponent is null for a zero tail bound.
Json to_json(const MahlerSeries& f);
Json to_json(const VanDerPutSeries& g);
using AnySeries = std::variant<MahlerSeries, VanDerPutSeries>;
AnySeries series_from_json(const Json& j);

// {"p","M","rows":[[i, j, value], ...]} listing entries that are not exact zeros.
Json to_json(const OperatorMatrix& a);
OperatorMatrix matrix_from_json(const Json& j);

Json to_json(const OrbitReport& r);
OrbitReport orbit_from_json(const Json& j);

// {"p","kappa0","s","r","level","value","error_bound_exponent","path"}; s is an
// integer when the argument was one.
Json to_json(const ZetaBranchEval& e);
ZetaBranchEval zeta_eval_from_json(const Json& j);

// Series files: a header line {"basis","p","M","tail_bound_exponent"} followed
// by one coefficient record per line.
void write_series_file(std::ostream& out, const AnySeries& s);
AnySeries read_series_file(std::istream& in);

// Samples files: an optional header line {"p": p}, then one sample per line as
// a PadicNumber record, an integer, or a rational "a/b" (embedded at the given
// precision). Blank lines and lines starting with '#' are skipped.
std::vector<PadicNumber> read_samples_file(std::istream& in, std::int64_t p, std::int64_t precision);

}  // namespace padic
