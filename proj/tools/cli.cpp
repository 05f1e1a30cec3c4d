#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "padic/random.hpp"
#include "padic/serialize.hpp"

namespace padic::cli {

namespace {

class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IoError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CheckFailed : public DomainError {
 public:
  using DomainError::DomainError;
};

struct Flags {
  std::optional<std::int64_t> p, precision, m, kappa0, level, regulator;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  std::string config;
};

template <typename T>
void take(std::optional<T>& slot, const Json& j, const char* key) {
  if (!j.contains(key)) return;
  try {
    slot = j.at(key).get<T>();
  } catch (const std::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

RunConfig resolve_config(const Flags& flags) {
  Flags file;
  std::string path = flags.config;
  if (const char* env = std::getenv("PADIC_CCR_CONFIG"); env && *env) path = env;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception&) {
      throw ConfigError("config file '" + path + "' is not valid JSON");
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    static const char* known[] = {"p", "precision", "m", "kappa0", "level", "regulator", "output", "seed"};
    for (const auto& [key, value] : j.items())
      if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) ==
          std::end(known))
        throw ConfigError("unknown config key '" + key + "'");
    take(file.p, j, "p");
    take(file.precision, j, "precision");
    take(file.m, j, "m");
    take(file.kappa0, j, "kappa0");
    take(file.level, j, "level");
    take(file.regulator, j, "regulator");
    take(file.output, j, "output");
    take(file.seed, j, "seed");
  }

  RunConfig c;
  auto pick = [](auto& target, const auto& flag, const auto& from_file) {
    if (flag) target = *flag;
    else if (from_file) target = *from_file;
  };
  pick(c.p, flags.p, file.p);
  pick(c.precision, flags.precision, file.precision);
  pick(c.m, flags.m, file.m);
  pick(c.level, flags.level, file.level);
  pick(c.output, flags.output, file.output);
  c.kappa0 = flags.kappa0 ? flags.kappa0 : file.kappa0;
  c.regulator = flags.regulator ? flags.regulator : file.regulator;
  c.seed = flags.seed ? flags.seed : file.seed;

  if (!is_prime(c.p)) throw ConfigError("p = " + std::to_string(c.p) + " is not prime");
  if (c.precision < 4) throw ConfigError("precision must be at least 4");
  if (c.m < 4) throw ConfigError("truncation M must be at least 4");
  if (c.level < 1) throw ConfigError("level must be at least 1");
  if (c.kappa0 && (*c.kappa0 < 0 || *c.kappa0 > std::max<std::int64_t>(c.p - 2, 0)))
    throw ConfigError("kappa0 must lie in [0, " + std::to_string(std::max<std::int64_t>(c.p - 2, 0)) + "]");
  if (c.regulator && gcd(*c.regulator, c.p) != 1)
    throw ConfigError("regulator " + std::to_string(*c.regulator) + " is not prime to p");
  if (c.output != "json" && c.output != "text") throw ConfigError("output must be 'json' or 'text'");
  return c;
}

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw DomainError("cannot parse number '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

PadicNumber embed(const BigRational& q, std::int64_t p, std::int64_t precision) {
  return q == 0 ? PadicNumber::zero(p, precision) : PadicNumber::from_rational(q, p, precision);
}

std::string rational_string(const BigRational& q) { return q.get_str(); }

Json report(const char* command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

void emit(std::ostream& out, const RunConfig& c, const Json& json, const std::string& text) {
  if (c.output == "json")
    out << json.dump() << '\n';
  else
    out << text;
}

std::string series_text(const MahlerSeries& f) {
  std::ostringstream s;
  s << "mahler series, p = " << f.prime() << ", M = " << f.truncation() << '\n';
  for (std::size_t n = 0; n < f.truncation(); ++n)
    if (!f[n].is_exact_zero()) s << "  c[" << n << "] = " << f[n].to_string() << '\n';
  s << "  tail <= " << (f.tail_bound().is_zero() ? std::string("0") : "p^-" + std::to_string(f.tail_bound().exponent()))
    << '\n';
  return s.str();
}

std::string series_text(const VanDerPutSeries& g) {
  std::ostringstream s;
  s << "van der Put series, p = " << g.prime() << ", M = " << g.truncation() << '\n';
  for (std::size_t n = 0; n < g.truncation(); ++n)
    if (!g[n].is_exact_zero()) s << "  v[" << n << "] = " << g[n].to_string() << '\n';
  s << "  tail <= " << (g.tail_bound().is_zero() ? std::string("0") : "p^-" + std::to_string(g.tail_bound().exponent()))
    << '\n';
  return s.str();
}

std::vector<PadicNumber> load_samples(const std::string& path, const RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open samples file '" + path + "'");
  return read_samples_file(in, c.p, c.precision);
}

AnySeries load_series(const std::string& path, const RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open series file '" + path + "'");
  AnySeries s = read_series_file(in);
  const std::int64_t p = std::visit([](const auto& f) { return f.prime(); }, s);
  if (p != c.p) throw PrimeMismatch(c.p, p);
  return s;
}

void save_series(const std::string& path, const AnySeries& s) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write series file '" + path + "'");
  write_series_file(out, s);
}

std::int64_t matched_kappa0(const RunConfig& c, std::int64_t k) {
  if (c.kappa0) return *c.kappa0;
  return c.p == 2 ? 0 : k % (c.p - 1);
}

std::int64_t regulator_of(const RunConfig& c) {
  return c.regulator ? *c.regulator : default_regulator(c.p);
}

// Valuation of the difference, or how far it is known to vanish.
std::int64_t gap_exponent(const PadicNumber& a, const PadicNumber& b) { return (a - b).valuation(); }

std::string bound_text(std::int64_t p, std::int64_t e) {
  return std::to_string(p) + "^" + std::to_string(-e);
}

// ---- subcommands ----

void cmd_teichmuller(const RunConfig& c, const std::string& alpha_text, std::ostream& out) {
  const PadicNumber alpha = embed(parse_rational(alpha_text), c.p, c.precision);
  if (!alpha.is_unit()) throw DomainError("teichmuller needs a p-adic unit, got " + alpha_text);
  const PadicNumber w = teichmuller(alpha, c.precision);
  const PadicNumber ang = alpha / w;
  Json j = report("teichmuller");
  j["p"] = c.p;
  j["alpha"] = alpha_text;
  j["omega"] = to_json(w);
  j["angle"] = to_json(ang);
  if (c.p > 2) j["t"] = t_of(alpha);
  std::ostringstream s;
  s << "omega(" << alpha_text << ") = " << w.to_string() << '\n'
    << "<" << alpha_text << "> = " << ang.to_string() << '\n';
  if (c.p > 2) s << "t = " << t_of(alpha) << '\n';
  emit(out, c, j, s.str());
}

void cmd_mahler_expand(const RunConfig& c, const std::string& file, const std::string& save,
                       std::ostream& out) {
  const auto samples = load_samples(file, c);
  const MahlerSeries f = mahler_expand(samples, static_cast<std::size_t>(c.m));
  save_series(save, f);
  Json j = report("mahler-expand");
  j["series"] = to_json(f);
  emit(out, c, j, series_text(f));
}

void cmd_vdp_expand(const RunConfig& c, const std::string& file, const std::string& save,
                    std::ostream& out) {
  const auto samples = load_samples(file, c);
  const VanDerPutSeries g = vdp_expand(samples, static_cast<std::size_t>(c.m));
  save_series(save, g);
  Json j = report("vdp-expand");
  j["series"] = to_json(g);
  emit(out, c, j, series_text(g));
}

void cmd_apply(const RunConfig& c, const std::string& op_name, const std::string& file,
               const std::string& save, std::ostream& out) {
  const Ladder op = parse_ladder(op_name);
  const AnySeries input = load_series(file, c);
  const MahlerSeries f = std::holds_alternative<MahlerSeries>(input)
                             ? std::get<MahlerSeries>(input)
                             : to_mahler(std::get<VanDerPutSeries>(input),
                                         std::get<VanDerPutSeries>(input).truncation());
  const MahlerSeries g = apply(op, f);
  save_series(save, g);
  Json j = report("apply");
  j["op"] = std::string(to_string(op));
  j["series"] = to_json(g);
  emit(out, c, j, std::string(to_string(op)) + " applied\n" + series_text(g));
}

void cmd_commutator_check(const RunConfig& c, std::int64_t trials, std::ostream& out) {
  if (trials < 1) throw DomainError("trials must be positive");
  if (!c.seed && std::getenv("CI")) throw ConfigError("commutator-check needs an explicit --seed in CI");
  const std::uint64_t seed = c.seed.value_or(0);
  Sampler sampler(seed);
  const auto m = static_cast<std::size_t>(c.m);
  std::int64_t passed = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const MahlerSeries defect = commutator_defect(sampler.mahler_series(c.p, m, c.precision));
    bool ok = true;
    for (std::size_t n = 0; n + 1 < m; ++n) ok = ok && defect[n].is_zero();
    passed += ok ? 1 : 0;
  }
  const std::string summary = "defect 0 on indices 0.." + std::to_string(m - 2) + " for " +
                              std::to_string(passed) + "/" + std::to_string(trials) + " trials";
  Json j = report("commutator-check");
  j["p"] = c.p;
  j["M"] = c.m;
  j["precision"] = c.precision;
  j["seed"] = seed;
  j["trials"] = trials;
  j["passed"] = passed;
  j["summary"] = summary;
  emit(out, c, j, summary + '\n');
  if (passed != trials) throw CheckFailed(summary);
}

void cmd_kernel(const RunConfig& c, const std::string& op_name, std::int64_t shift, std::ostream& out) {
  const Ladder op = parse_ladder(op_name);
  const auto m = static_cast<std::size_t>(c.m);
  OperatorMatrix a = as_matrix(op, c.p, m, c.precision);
  if (shift != 0) {
    const PadicNumber n = PadicNumber::from_integer(Integer(static_cast<long>(shift)), c.p, c.precision);
    a = a - OperatorMatrix::identity(c.p, m, c.precision).scaled(n);
  }
  const auto basis = kernel_solve(a);
  Json j = report("kernel");
  j["p"] = c.p;
  j["M"] = c.m;
  j["op"] = std::string(to_string(op));
  j["shift"] = shift;
  j["dimension"] = basis.size();
  j["basis"] = Json::array();
  for (const auto& v : basis) j["basis"].push_back(to_json(v));
  std::ostringstream s;
  s << "kernel of " << to_string(op);
  if (shift != 0) s << " - " << shift << "I";
  s << " at M = " << m << ": dimension " << basis.size() << '\n';
  for (std::size_t i = 0; i < basis.size(); ++i) {
    s << "  v" << i << " =";
    for (std::size_t n = 0; n < m; ++n)
      if (!basis[i][n].is_zero()) s << " (" << basis[i][n].to_string() << ") P_" << n;
    s << '\n';
  }
  emit(out, c, j, s.str());
}

void cmd_orbit(const RunConfig& c, std::int64_t kappa0, const std::string& op_name, std::ostream& out) {
  const Branch branch(c.p, kappa0);
  const Ladder op = parse_ladder(op_name);
  const OperatorMatrix a = as_matrix(op, c.p, static_cast<std::size_t>(c.m), c.precision);
  const OrbitReport r = orbit(branch, a);
  Json j = report("orbit");
  j["op"] = std::string(to_string(op));
  j.update(to_json(r));
  std::ostringstream s;
  s << "orbit of " << to_string(op) << " under rho'_" << kappa0 << ", p = " << c.p << ": period "
    << r.period << '\n';
  const std::int64_t cycle = std::max<std::int64_t>(c.p - 1, 1);
  for (std::int64_t t = 0; t < cycle; ++t) {
    s << "  t = " << t << ": ";
    const std::int64_t e = (kappa0 * t) % cycle;
    if (e == 0)
      s << "A\n";
    else
      s << "zeta^" << e << " A, zeta^" << e << " = " << fixed_generator(c.p, c.precision).pow(e).to_string()
        << '\n';
  }
  emit(out, c, j, s.str());
}

void cmd_zeta_interp(const RunConfig& c, std::int64_t k, std::ostream& out) {
  if (k < 1) throw DomainError("k must be a positive integer");
  const Branch branch(c.p, matched_kappa0(c, k));
  const ZetaBranchEval e = zeta_interp_eval(static_cast<std::uint64_t>(k), branch, c.precision);
  const BigRational exact = zeta_interp_exact(static_cast<std::uint64_t>(k), branch);
  Json j = report("zeta-interp");
  j.update(to_json(e));
  j["exact"] = rational_string(exact);
  std::ostringstream s;
  s << "zeta_{" << c.p << "," << branch.kappa0() << "}(" << 1 - k << ") = " << rational_string(exact)
    << " = " << e.value.to_string() << '\n';
  emit(out, c, j, s.str());
}

std::pair<std::int64_t, std::int64_t> parse_levels(const std::string& text, std::int64_t fallback) {
  if (text.empty()) return {fallback, fallback};
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const std::int64_t a = std::stoll(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const std::int64_t b = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (a < 1 || b < a) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw DomainError("--levels expects N or a..b with 1 <= a <= b, got '" + text + "'");
  }
}

// k = 0 is allowed here: it asks for s = 1, the pole of the kappa0 = 0 branch.
void cmd_zeta_measure(const RunConfig& c, std::int64_t k, const std::string& levels, std::ostream& out) {
  if (k < 0) throw DomainError("k must be a nonnegative integer");
  const Branch branch(c.p, matched_kappa0(c, k));
  const std::int64_t r = regulator_of(c);
  const auto [lo, hi] = parse_levels(levels, c.level);

  std::optional<ZetaBranchEval> interp;
  try {
    const auto uk = static_cast<std::uint64_t>(k);
    if (k >= 1 && uk <= kInterpolationLimit) interp = zeta_interp_eval(uk, branch, hi + 16);
  } catch (const BranchError&) {
    require_even_branch(branch);  // odd branches fail outright; unmatched k just has no oracle
  }

  Json j = report("zeta-measure");
  j["p"] = c.p;
  j["kappa0"] = branch.kappa0();
  j["k"] = k;
  j["r"] = r;
  j["interpolation"] = interp ? to_json(*interp) : Json(nullptr);
  j["evaluations"] = Json::array();
  std::ostringstream s;
  s << "zeta_{" << c.p << "," << branch.kappa0() << "}(" << 1 - k << ") by Riemann sums, r = " << r << '\n';
  for (std::int64_t n = lo; n <= hi; ++n) {
    const ZetaBranchEval e = zeta_measure(1 - k, branch, r, n);
    Json row = to_json(e);
    s << "  N = " << n << ": " << e.value.to_string() << "  error <= " << bound_text(c.p, e.error_bound_exponent);
    if (interp) {
      const std::int64_t gap = gap_exponent(e.value, interp->value);
      row["gap_exponent"] = gap;
      s << "  |measure - interpolation| <= " << bound_text(c.p, gap);
    }
    s << '\n';
    j["evaluations"].push_back(std::move(row));
  }
  if (interp) s << "  interpolation: " << interp->value.to_string() << '\n';
  emit(out, c, j, s.str());
}

void cmd_zeta_table(const RunConfig& c, std::int64_t kmax, std::ostream& out) {
  if (kmax < 1) throw DomainError("kmax must be a positive integer");
  if (static_cast<std::uint64_t>(kmax) > kInterpolationLimit)
    throw DomainError("kmax must be at most " + std::to_string(kInterpolationLimit));
  const std::int64_t r = regulator_of(c);
  Json j = report("zeta-table");
  j["p"] = c.p;
  j["r"] = r;
  j["level"] = c.level;
  j["rows"] = Json::array();
  std::ostringstream s;
  s << "p = " << c.p << ", r = " << r << ", level " << c.level << '\n';
  for (std::int64_t kappa0 = 0; kappa0 <= std::max<std::int64_t>(c.p - 2, 0); kappa0 += 2) {
    if (c.kappa0 && *c.kappa0 != kappa0) continue;
    const Branch branch(c.p, kappa0);
    for (std::int64_t k = 1; k <= kmax; ++k) {
      const bool matched = c.p == 2 ? k % 2 == 0 : k % (c.p - 1) == kappa0;
      if (!matched) continue;
      const BigRational exact = zeta_interp_exact(static_cast<std::uint64_t>(k), branch);
      const PadicNumber interp = zeta_interp(static_cast<std::uint64_t>(k), branch, c.precision);
      const ZetaBranchEval e = zeta_measure(1 - k, branch, r, c.level);
      const std::int64_t gap = gap_exponent(e.value, interp);
      j["rows"].push_back(Json{{"k", k},
                               {"kappa0", kappa0},
                               {"exact", rational_string(exact)},
                               {"interpolation", to_json(interp)},
                               {"measure", to_json(e.value)},
                               {"error_bound_exponent", e.error_bound_exponent},
                               {"gap_exponent", gap},
                               {"agree", gap >= e.error_bound_exponent}});
      s << "  kappa0 = " << kappa0 << ", k = " << k << ": " << rational_string(exact)
        << "  gap " << bound_text(c.p, gap) << " vs bound " << bound_text(c.p, e.error_bound_exponent)
        << (gap >= e.error_bound_exponent ? "  ok" : "  MISMATCH") << '\n';
    }
  }
  emit(out, c, j, s.str());
}

int fail(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << "error[" << kind << "]: " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic canonical commutation relations, Galois actions and zeta branches", "padic-ccr"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--p", flags.p, "prime");
  app.add_option("--precision", flags.precision, "p-adic digits (>= 4)");
  app.add_option("--m", flags.m, "Mahler truncation M (>= 4)");
  app.add_option("--kappa0", flags.kappa0, "branch index in [0, p-2]");
  app.add_option("--level", flags.level, "measure level N");
  app.add_option("--regulator", flags.regulator, "measure regulator r, prime to p");
  app.add_option("--output", flags.output, "text or json");
  app.add_option("--seed", flags.seed, "seed for randomized commands");
  app.add_option("--config", flags.config, "JSON config file (PADIC_CCR_CONFIG overrides)");

  std::function<void(const RunConfig&)> action;
  std::string s1, s2, save, levels, orbit_op = "lowering";
  std::int64_t n1 = 0, shift = 0, trials = 50;

  auto* teich = app.add_subcommand("teichmuller", "Teichmuller representative of a unit");
  teich->add_option("alpha", s1, "integer or rational a/b")->required();
  teich->callback([&] { action = [&](const RunConfig& c) { cmd_teichmuller(c, s1, out); }; });

  auto* mexp = app.add_subcommand("mahler-expand", "Mahler coefficients from a samples file");
  mexp->add_option("samples-file", s1)->required();
  mexp->add_option("--save", save, "write the series file here");
  mexp->callback([&] { action = [&](const RunConfig& c) { cmd_mahler_expand(c, s1, save, out); }; });

  auto* vexp = app.add_subcommand("vdp-expand", "van der Put coefficients from a samples file");
  vexp->add_option("samples-file", s1)->required();
  vexp->add_option("--save", save, "write the series file here");
  vexp->callback([&] { action = [&](const RunConfig& c) { cmd_vdp_expand(c, s1, save, out); }; });

  auto* app_op = app.add_subcommand("apply", "apply a ladder operator to a series file");
  app_op->add_option("op", s1, "raising, lowering or hamiltonian")->required();
  app_op->add_option("series-file", s2)->required();
  app_op->add_option("--save", save, "write the resulting series file here");
  app_op->callback([&] { action = [&](const RunConfig& c) { cmd_apply(c, s1, s2, save, out); }; });

  auto* ccr = app.add_subcommand("commutator-check", "[a-, a+] = 1 on random series");
  ccr->add_option("--trials", trials, "number of random series");
  ccr->callback([&] { action = [&](const RunConfig& c) { cmd_commutator_check(c, trials, out); }; });

  auto* ker = app.add_subcommand("kernel", "kernel of a ladder operator matrix");
  ker->add_option("op", s1, "raising, lowering or hamiltonian")->required();
  ker->add_option("--shift", shift, "solve (op - shift I) v = 0");
  ker->callback([&] { action = [&](const RunConfig& c) { cmd_kernel(c, s1, shift, out); }; });

  auto* orb = app.add_subcommand("orbit", "orbit of an operator under rho'");
  orb->add_option("kappa0", n1)->required();
  orb->add_option("--op", orbit_op, "operator to act on (default lowering)");
  orb->callback([&] { action = [&](const RunConfig& c) { cmd_orbit(c, n1, orbit_op, out); }; });

  auto* zi = app.add_subcommand("zeta-interp", "zeta_(p,kappa0)(1-k) from Bernoulli numbers");
  zi->add_option("k", n1)->required();
  zi->callback([&] { action = [&](const RunConfig& c) { cmd_zeta_interp(c, n1, out); }; });

  auto* zm = app.add_subcommand("zeta-measure", "zeta_(p,kappa0)(1-k) by Riemann sums");
  zm->add_option("k", n1)->required();
  zm->add_option("--levels", levels, "N or a..b");
  zm->callback([&] { action = [&](const RunConfig& c) { cmd_zeta_measure(c, n1, levels, out); }; });

  auto* zt = app.add_subcommand("zeta-table", "both paths for every even branch and k <= kmax");
  zt->add_option("kmax", n1)->required();
  zt->callback([&] { action = [&](const RunConfig& c) { cmd_zeta_table(c, n1, out); }; });

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ExtrasError& e) {
    if (app.get_subcommands().empty() && !args.empty())
      return fail(err, "usage", "unknown subcommand: " + std::string(e.what()), kDomainError);
    return fail(err, "usage", e.what(), kDomainError);
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty())
      return fail(err, "usage", "missing or unknown subcommand (see --help)", kDomainError);
    return fail(err, "usage", e.what(), kDomainError);
  }

  try {
    const RunConfig config = resolve_config(flags);
    action(config);
    return kSuccess;
  } catch (const ConfigError& e) {
    return fail(err, "config", e.what(), kDomainError);
  } catch (const IoError& e) {
    return fail(err, "io", e.what(), kDomainError);
  } catch (const CheckFailed& e) {
    return fail(err, "check", e.what(), kDomainError);
  } catch (const FormatError& e) {
    return fail(err, "format", e.what(), kDomainError);
  } catch (const PoleError& e) {
    return fail(err, "pole", e.what(), kDomainError);
  } catch (const BranchError& e) {
    return fail(err, "branch", e.what(), kDomainError);
  } catch (const DomainError& e) {
    return fail(err, "domain", e.what(), kDomainError);
  } catch (const PrecisionExhausted& e) {
    return fail(err, "precision", e.what(), kPrecisionExhausted);
  } catch (const Error& e) {
    return fail(err, "domain", e.what(), kDomainError);
  }
}

}  // namespace padic::cli
