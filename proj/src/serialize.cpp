#include "padic/serialize.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace padic {

namespace {

template <typename F>
auto guarded(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Json tail_json(AbsValue tail) {
  return tail.is_zero() ? Json(nullptr) : Json(tail.exponent());
}

AbsValue tail_from_json(const Json& j, std::int64_t p) {
  const Json& t = field(j, "tail_bound_exponent");
  if (t.is_null()) return AbsValue::zero(p);
  if (!t.is_number_integer()) throw FormatError("tail_bound_exponent must be an integer or null");
  return AbsValue::power(p, t.get<std::int64_t>());
}

template <Basis B>
Json series_json(const Series<B>& f) {
  Json c = Json::array();
  for (const auto& x : f.coefficients()) c.push_back(to_json(x));
  return Json{{"basis", B == Basis::mahler ? "mahler" : "vdp"},
              {"p", f.prime()},
              {"M", f.truncation()},
              {"coefficients", std::move(c)},
              {"tail_bound_exponent", tail_json(f.tail_bound())}};
}

AnySeries make_series(const std::string& basis, std::int64_t p, std::vector<PadicNumber> c,
                      AbsValue tail) {
  if (basis == "mahler") return MahlerSeries(p, std::move(c), tail);
  if (basis == "vdp") return VanDerPutSeries(p, std::move(c), tail);
  throw FormatError("unknown basis '" + basis + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Json to_json(const PadicNumber& x) {
  if (x.is_zero()) {
    return Json{{"p", x.prime()},
                {"zero", true},
                {"known_to", x.is_exact_zero() ? Json(nullptr) : Json(x.valuation())}};
  }
  return Json{{"p", x.prime()},
              {"valuation", x.valuation()},
              {"digits", x.unit_digits()},
              {"precision", x.precision()}};
}

PadicNumber padic_from_json(const Json& j) {
  return guarded("p-adic number", [&] {
    const std::int64_t p = integer_field(j, "p");
    if (!is_prime(p)) throw FormatError(std::to_string(p) + " is not prime");
    if (j.contains("zero")) {
      if (!j.at("zero").is_boolean() || !j.at("zero").get<bool>())
        throw FormatError("field 'zero' must be true");
      const Json& k = field(j, "known_to");
      if (k.is_null()) return PadicNumber::zero(p);
      if (!k.is_number_integer()) throw FormatError("known_to must be an integer or null");
      return PadicNumber::zero(p, k.get<std::int64_t>());
    }
    const std::int64_t v = integer_field(j, "valuation");
    const std::int64_t n = integer_field(j, "precision");
    const auto digits = field(j, "digits").get<std::vector<std::int64_t>>();
    if (static_cast<std::int64_t>(digits.size()) != n)
      throw FormatError("digit count does not match precision");
    if (digits.empty() || digits.front() == 0)
      throw FormatError("unit digits must start with a nonzero digit");
    return PadicNumber::from_digits(p, v, digits);
  });
}

Json to_json(const MahlerSeries& f) { return series_json(f); }
Json to_json(const VanDerPutSeries& g) { return series_json(g); }

AnySeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    const std::int64_t p = integer_field(j, "p");
    const std::int64_t m = integer_field(j, "M");
    const Json& c = field(j, "coefficients");
    if (!c.is_array() || static_cast<std::int64_t>(c.size()) != m)
      throw FormatError("coefficient count does not match M");
    std::vector<PadicNumber> coeffs;
    for (const auto& x : c) coeffs.push_back(padic_from_json(x));
    return make_series(field(j, "basis").get<std::string>(), p, std::move(coeffs),
                       tail_from_json(j, p));
  });
}

Json to_json(const OperatorMatrix& a) {
  Json rows = Json::array();
  for (const auto& e : a.nonzero_entries()) rows.push_back(Json::array({e.row, e.col, to_json(e.value)}));
  return Json{{"p", a.prime()}, {"M", a.dimension()}, {"rows", std::move(rows)}};
}

OperatorMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const std::int64_t p = integer_field(j, "p");
    const std::int64_t m = integer_field(j, "M");
    if (m < 1) throw FormatError("matrix dimension must be positive");
    std::vector<MatrixEntry> entries;
    for (const auto& t : field(j, "rows")) {
      if (!t.is_array() || t.size() != 3) throw FormatError("matrix rows are [i, j, value] triplets");
      entries.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(), padic_from_json(t[2])});
    }
    return OperatorMatrix::from_entries(p, static_cast<std::size_t>(m), entries);
  });
}

Json to_json(const OrbitReport& r) {
  Json orbit = Json::array();
  for (const auto& a : r.orbit) orbit.push_back(to_json(a));
  return Json{{"p", r.p}, {"kappa0", r.kappa0}, {"period", r.period}, {"orbit", std::move(orbit)}};
}

OrbitReport orbit_from_json(const Json& j) {
  return guarded("orbit report", [&] {
    OrbitReport r{integer_field(j, "p"), integer_field(j, "kappa0"), integer_field(j, "period"), {}};
    for (const auto& a : field(j, "orbit")) r.orbit.push_back(matrix_from_json(a));
    return r;
  });
}

Json to_json(const ZetaBranchEval& e) {
  return Json{{"p", e.p},
              {"kappa0", e.kappa0},
              {"s", e.s_integer ? Json(*e.s_integer) : to_json(e.s)},
              {"r", e.regulator},
              {"level", e.level},
              {"value", to_json(e.value)},
              {"error_bound_exponent", e.error_bound_exponent},
              {"path", to_string(e.path)}};
}

ZetaBranchEval zeta_eval_from_json(const Json& j) {
  return guarded("zeta report", [&] {
    const std::int64_t p = integer_field(j, "p");
    const Json& s = field(j, "s");
    std::optional<std::int64_t> s_integer;
    PadicNumber s_value = PadicNumber::zero(p);
    if (s.is_number_integer()) {
      s_integer = s.get<std::int64_t>();
      if (*s_integer != 0)
        s_value = PadicNumber::from_integer(Integer(static_cast<long>(*s_integer)), p, 64);
    } else {
      s_value = padic_from_json(s);
    }
    const std::string path = field(j, "path").get<std::string>();
    if (path != "measure" && path != "interpolation") throw FormatError("unknown path '" + path + "'");
    return ZetaBranchEval{p,
                          integer_field(j, "kappa0"),
                          std::move(s_value),
                          s_integer,
                          integer_field(j, "r"),
                          integer_field(j, "level"),
                          padic_from_json(field(j, "value")),
                          integer_field(j, "error_bound_exponent"),
                          path == "measure" ? ZetaPath::measure : ZetaPath::interpolation};
  });
}

void write_series_file(std::ostream& out, const AnySeries& s) {
  std::visit(
      [&](const auto& f) {
        Json header = series_json(f);
        header.erase("coefficients");
        out << header.dump() << '\n';
        for (const auto& c : f.coefficients()) out << to_json(c).dump() << '\n';
      },
      s);
}

AnySeries read_series_file(std::istream& in) {
  return guarded("series file", [&] {
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
      line = trim(line);
      if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    if (lines.empty()) throw FormatError("series file is empty");
    const Json header = Json::parse(lines[0]);
    const std::int64_t p = integer_field(header, "p");
    const std::int64_t m = integer_field(header, "M");
    if (static_cast<std::int64_t>(lines.size()) - 1 != m)
      throw FormatError("series file header announces M = " + std::to_string(m) + " but has " +
                        std::to_string(lines.size() - 1) + " coefficient lines");
    std::vector<PadicNumber> coeffs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      PadicNumber c = padic_from_json(Json::parse(lines[i]));
      if (c.prime() != p) throw FormatError("coefficient " + std::to_string(i - 1) + " has the wrong prime");
      coeffs.push_back(std::move(c));
    }
    return make_series(field(header, "basis").get<std::string>(), p, std::move(coeffs),
                       tail_from_json(header, p));
  });
}

std::vector<PadicNumber> read_samples_file(std::istream& in, std::int64_t p, std::int64_t precision) {
  return guarded("samples file", [&] {
    std::vector<PadicNumber> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      if (line[0] == '{') {
        const Json j = Json::parse(line);
        if (first && !j.contains("valuation") && !j.contains("zero")) {
          const std::int64_t hp = integer_field(j, "p");
          if (hp != p) throw PrimeMismatch(p, hp);
          first = false;
          continue;
        }
        PadicNumber x = padic_from_json(j);
        if (x.prime() != p) throw PrimeMismatch(p, x.prime());
        out.push_back(std::move(x));
      } else {
        BigRational q;
        if (q.set_str(line, 10) != 0) throw FormatError("cannot parse sample '" + line + "'");
        if (q.get_den() == 0) throw FormatError("zero denominator in sample '" + line + "'");
        q.canonicalize();
        out.push_back(q == 0 ? PadicNumber::zero(p, precision)
                             : PadicNumber::from_rational(q, p, precision));
      }
      first = false;
    }
    if (out.empty()) throw FormatError("samples file has no samples");
    return out;
  });
}

}  // namespace padic
