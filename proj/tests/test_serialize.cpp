#include <doctest.h>

#include <sstream>

#include "padic/random.hpp"
#include "padic/serialize.hpp"
#include "support.hpp"

using namespace padic;
using test::Q;
using test::Z;

TEST_CASE("padic number records") {
  CHECK(to_json(Q(1, 12, 2, 4)).dump() == R"({"p":2,"valuation":-2,"digits":[1,1,0,1],"precision":4})");
  CHECK(to_json(PadicNumber::zero(2)).dump() == R"({"p":2,"zero":true,"known_to":null})");
  CHECK(to_json(PadicNumber::zero(2, 7)).dump() == R"({"p":2,"zero":true,"known_to":7})");
  Sampler rng(71);
  for (std::int64_t p : {2, 3, 5, 97}) {
    for (int i = 0; i < 50; ++i) {
      auto x = rng.unit(p, 12) * Z(p, p, 12).pow(static_cast<std::int64_t>(rng.below(5))) / Z(p, p, 12);
      REQUIRE(padic_from_json(to_json(x)) == x);
      REQUIRE(padic_from_json(Json::parse(to_json(x).dump())) == x);
    }
    CHECK(padic_from_json(to_json(PadicNumber::zero(p, 3))) == PadicNumber::zero(p, 3));
    CHECK(padic_from_json(to_json(PadicNumber::zero(p))) == PadicNumber::zero(p));
  }
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(padic_from_json(Json::parse(R"({"p":2})")), FormatError);
  CHECK_THROWS_AS(padic_from_json(Json::parse(R"({"p":2,"valuation":0,"digits":[3],"precision":1})")),
                  FormatError);
  CHECK_THROWS_AS(padic_from_json(Json::parse(R"({"p":4,"valuation":0,"digits":[1],"precision":1})")),
                  FormatError);
  CHECK_THROWS_AS(padic_from_json(Json::parse(R"({"p":3,"valuation":0,"digits":[1,2],"precision":3})")),
                  FormatError);
  CHECK_THROWS_AS(padic_from_json(Json::parse("[1,2]")), FormatError);
}

TEST_CASE("series records") {
  Sampler rng(73);
  const auto f = rng.mahler_series(5, 12, 10);
  const auto back = series_from_json(to_json(f));
  REQUIRE(std::holds_alternative<MahlerSeries>(back));
  CHECK(std::get<MahlerSeries>(back) == f);
  const auto g = to_van_der_put(f);
  CHECK(std::get<VanDerPutSeries>(series_from_json(to_json(g))) == g);
  const auto basis = MahlerSeries::basis_vector(3, 4, 1, 8);
  CHECK(to_json(basis)["tail_bound_exponent"].is_null());
  CHECK(std::get<MahlerSeries>(series_from_json(to_json(basis))) == basis);

  Json wrong = to_json(f);
  wrong["basis"] = "fourier";
  CHECK_THROWS_AS(series_from_json(wrong), FormatError);
  wrong = to_json(f);
  wrong["M"] = 11;
  CHECK_THROWS_AS(series_from_json(wrong), FormatError);
}

TEST_CASE("series files") {
  Sampler rng(79);
  const AnySeries f = rng.mahler_series(7, 9, 6);
  std::stringstream buffer;
  write_series_file(buffer, f);
  CHECK(read_series_file(buffer) == f);

  const AnySeries g = to_van_der_put(std::get<MahlerSeries>(f));
  std::stringstream buffer2;
  write_series_file(buffer2, g);
  std::string header;
  std::getline(buffer2, header);
  CHECK(Json::parse(header).at("basis") == "vdp");
  buffer2.seekg(0);
  CHECK(read_series_file(buffer2) == g);

  std::istringstream truncated(R"({"basis":"mahler","p":7,"M":3,"tail_bound_exponent":null})"
                               "\n" R"({"p":7,"zero":true,"known_to":null})");
  CHECK_THROWS_AS(read_series_file(truncated), FormatError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_series_file(empty), FormatError);
}

TEST_CASE("samples files") {
  std::istringstream in("# squares\n0\n1\n\n4\n1/3\n" R"({"p":5,"valuation":1,"digits":[1],"precision":1})" "\n");
  const auto s = read_samples_file(in, 5, 10);
  REQUIRE(s.size() == 5);
  CHECK(s[2] == Z(4, 5, 10));
  CHECK(s[3] == Q(1, 3, 5, 10));
  CHECK(s[4].valuation() == 1);

  std::istringstream header(R"({"p":3})" "\n2\n");
  CHECK_THROWS_AS(read_samples_file(header, 5, 10), FormatError);
  std::istringstream junk("1\nfoo\n");
  CHECK_THROWS_AS(read_samples_file(junk, 5, 10), FormatError);
  std::istringstream divide("1/0\n");
  CHECK_THROWS_AS(read_samples_file(divide, 5, 10), FormatError);
}

TEST_CASE("matrix and orbit records") {
  const auto a = as_matrix(Ladder::raising, 5, 6, 10);
  CHECK(matrix_from_json(to_json(a)) == a);
  CHECK(to_json(a)["rows"].size() == 5);
  const auto r = orbit(Branch(5, 2), a);
  CHECK(orbit_from_json(to_json(r)) == r);
  CHECK(orbit_from_json(Json::parse(to_json(r).dump())) == r);
  Json bad = to_json(a);
  bad["rows"][0][0] = 6;
  CHECK_THROWS_AS(matrix_from_json(bad), FormatError);
}

TEST_CASE("zeta reports") {
  auto same = [](const ZetaBranchEval& x, const ZetaBranchEval& y) {
    return x.p == y.p && x.kappa0 == y.kappa0 && x.s == y.s && x.s_integer == y.s_integer &&
           x.regulator == y.regulator && x.level == y.level && x.value == y.value &&
           x.error_bound_exponent == y.error_bound_exponent && x.path == y.path;
  };
  const auto a = zeta_interp_eval(2, Branch(2, 0), 16);
  const auto j = to_json(a);
  CHECK(j["s"] == -1);
  CHECK(j["path"] == "interpolation");
  CHECK(same(zeta_eval_from_json(j), a));
  const auto b = zeta_measure(-1, Branch(5, 2), 2, 3);
  CHECK(same(zeta_eval_from_json(to_json(b)), b));
  const auto c = zeta_measure(Q(1, 3, 5, 12), Branch(5, 2), 2, 3);
  CHECK(to_json(c)["s"].is_object());
  CHECK(same(zeta_eval_from_json(to_json(c)), c));
}
