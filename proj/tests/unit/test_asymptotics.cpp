#include <doctest.h>

#include <random>

#include "tlent/asymptotics.hpp"
#include "tlent/closedform.hpp"
#include "tlent/special_values.hpp"

using namespace tlent;

namespace {

constexpr long kBits = 256;

Real R(const char* s) { return Real(kBits, std::string(s)); }
Real R(int num, int den = 1) { return Real(kBits, mpq_class(num, den)); }

bool near(const Real& a, const Real& b, const char* tol) { return abs(a - b) < Real(kBits, std::string(tol)); }

}  // namespace

TEST_CASE("parametrisation") {
  CHECK(near(x_of_r(R(1)), R(1), "1e-70"));
  CHECK(near(x_of_r(R(5, 2)), R(-1), "1e-70"));
  CHECK(near(x_of_r(R(2)), R(0), "1e-70"));
  CHECK_THROWS_AS(x_of_r(R(0)), std::domain_error);
  CHECK_THROWS_AS(x_of_r(R(3)), std::domain_error);

  CHECK(near(r_of_x(R(2)).r, R(1, 2), "1e-70"));
  CHECK(near(r_of_x(R(0)).r, R(2), "1e-70"));
  const RParam c = r_of_x(R(-1));
  CHECK(near(c.r, R(5, 2), "1e-70"));
  CHECK(c.branch == Branch::Low);
  CHECK(r_of_x(R(-2)).branch == Branch::High);
  CHECK(std::string(to_string(Branch::High)) == "high");
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    const Real x = R(num(rng), 9973);
    CHECK(near(x_of_r(r_of_x(x).r), x, "1e-30"));
  }
  std::uniform_int_distribution<long> rn(1, 29999);
  for (int i = 0; i < 200; ++i) {
    const Real r = R(rn(rng), 10000);
    CHECK(near(r_of_x(x_of_r(r)).r, r, "1e-30"));
  }
}

TEST_CASE("r decreases with x") {
  Real prev = r_of_x(R(-50)).r;
  for (long k = -199; k <= 200; ++k) {
    const Real r = r_of_x(R(k, 4)).r;
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("cylinder coefficients against quadrature of their differential equations") {
  struct Frozen {
    long num, den;
    const char* f0;
    const char* f1;
  };
  const Frozen frozen[] = {
      {2, 1, "0.431523108677671391158828508990741147255264566346641584759999",
       "-0.490414626505863118428225563726001999789504922629008155313673"},
      {1, 2, "-0.261624071882273918258403612467435420820235568013613669360681",
       "0.202732554054082190989006557732174568285995211731247098807007"},
      {1, 4, "-0.394755176067896542623985080584250369650346191029938287351772",
       "0.249287429228509396715852801358972101699356243685172618691805"},
      {5, 1, "1.1884873523032565659728309754851389161344078591806984401705",
       "-1.35537428558248403211156498283399581663834775144150188013377"},
      {-1, 2, "-0.756152399147406449699922221212318132962298663273245601290759",
       "0.238172252589847553282238985474452418109628216421285130590872"},
  };
  for (const auto& f : frozen) {
    CHECK(near(f_coeff(0, R(f.num, f.den)), R(f.f0), "1e-45"));
    CHECK(near(f_coeff(1, R(f.num, f.den)), R(f.f1), "1e-45"));
  }
}

TEST_CASE("cylinder coefficients at special points") {
  CHECK(near(f_coeff(0, R(0)), log(R(16, 27)), "1e-70"));
  CHECK(near(f_coeff(2, R(1)), R(0), "1e-70"));
  CHECK(near(f_coeff(0, R(1)), R(0), "1e-70"));
  CHECK(near(f_coeff(1, R(1)), R(0), "1e-70"));
  const Real expected = log(sqrt(R(3)) / 2 * sin(pi(kBits) / 4) / sin(pi(kBits) / 2));
  CHECK(near(f_coeff_branch(1, R(1, 2), Branch::Low), expected, "1e-70"));
  CHECK_THROWS_AS(f_coeff(kMaxFIndex + 1, R(1)), std::domain_error);
  CHECK_THROWS_AS(s_minus(7, R(1)), std::domain_error);
}

TEST_CASE("higher corrections are the S coefficients") {
  for (long k = 1; k < 30; ++k) {
    const Real r = R(k, 10);
    for (int j = 3; j <= kMaxFIndex; ++j) CHECK(near(f_coeff_branch(j, r, Branch::Low), -s_minus(j - 1, r), "1e-70"));
    CHECK(near(f_coeff_branch(2, r, Branch::Low), -s_minus(1, r), "1e-70"));
  }
}

TEST_CASE("leading coefficient solves its differential equation") {
  // x(1-x) f0'^2 - 2 f0' + 1 = 0
  const Real h = R("1e-30");
  for (const char* xs : {"-3", "-2", "-0.5", "0.25", "0.5", "2", "5"}) {
    const Real x = R(xs);
    const Real d = (f_coeff(0, x + h) - f_coeff(0, x - h)) / (h * 2);
    const Real res = x * (1 - x) * d * d - d * 2 + 1;
    CHECK_MESSAGE(abs(res) < R("1e-40"), "x=", xs);
  }
}

TEST_CASE("branches agree at the crossover") {
  const Real rc = R(5, 2);
  for (int j = 0; j <= kMaxFIndex; ++j) {
    CHECK_MESSAGE(near(f_coeff_branch(j, rc, Branch::Low), f_coeff_branch(j, rc, Branch::High), "1e-30"), "j=", j);
  }
  for (auto g : {BoundaryKind::ReflectingEven, BoundaryKind::ReflectingOdd}) {
    CHECK(near(g_coeff_branch(g, 0, rc, Branch::Low), g_coeff_branch(g, 0, rc, Branch::High), "1e-30"));
  }
}

TEST_CASE("strip coefficients") {
  CHECK(near(g_coeff(BoundaryKind::ReflectingEven, 1, R(0)), R(-1, 2), "1e-70"));
  CHECK(near(g_coeff(BoundaryKind::ReflectingOdd, 1, R(2)), R(-1, 24), "1e-70"));
  CHECK(near(g_coeff(BoundaryKind::ReflectingEven, 1, R(1)), R(0), "1e-70"));
  CHECK(near(g_coeff(BoundaryKind::ReflectingEven, 1, R(-1)), R(1, 8), "1e-70"));
  CHECK(near(g_coeff(BoundaryKind::ReflectingOdd, 1, R(-1)), R(-3, 8), "1e-70"));
  CHECK(near(g_coeff(BoundaryKind::ReflectingEven, 0, R(2)), f_coeff(0, R(2)), "1e-70"));
  CHECK_THROWS_AS(g_coeff(BoundaryKind::PeriodicEven, 1, R(0)), std::invalid_argument);
  CHECK_THROWS_AS(g_coeff(BoundaryKind::ReflectingEven, 2, R(0)), std::domain_error);
}

TEST_CASE("sign rule") {
  CHECK(epsilon_sign(BoundaryKind::PeriodicEven, 10, -2) == -1);
  CHECK(epsilon_sign(BoundaryKind::PeriodicEven, 11, -2) == 1);
  CHECK(epsilon_sign(BoundaryKind::PeriodicEven, 10, mpq_class(3, 10)) == 1);
  CHECK_THROWS_AS(epsilon_sign(BoundaryKind::PeriodicOdd, 3, 2), std::invalid_argument);
  for (const mpq_class& x : {mpq_class(-2), mpq_class(-3, 2)}) {
    for (int n = 2; n <= 40; ++n) {
      CHECK(epsilon_sign(BoundaryKind::PeriodicEven, n, x) == sgn(per_even_tilde(n, x)));
      CHECK(epsilon_sign(BoundaryKind::ReflectingEven, n, x) ==
            sgn(genfun_closed(BoundaryKind::ReflectingEven, 2 * n).eval_tilde(x)));
      CHECK(epsilon_sign(BoundaryKind::ReflectingOdd, n, x) ==
            sgn(genfun_closed(BoundaryKind::ReflectingOdd, 2 * n + 1).eval_tilde(x)));
    }
  }
}

TEST_CASE("boundary g-factor") {
  CHECK(near(affleck_ludwig_g(R(1)), R(1), "1e-70"));
  for (const char* xs : {"-0.5", "0", "0.25", "2", "7"}) {
    const Real x = R(xs);
    CHECK(near(affleck_ludwig_g(x), x * exp(f_coeff(1, x)), "1e-30"));
  }
  CHECK(near(affleck_ludwig_g(R(2)), sqrt(R(3)) / 2 * sin(pi(kBits) / 4) / sin(pi(kBits) / 6), "1e-70"));
  CHECK(near(affleck_ludwig_g(R(-1) + R("1e-40")), -sqrt(R(6)) / 2, "1e-35"));
  CHECK_THROWS_AS(affleck_ludwig_g(R(-1)), std::domain_error);
}

TEST_CASE("tabulated strip constants") {
  // Independent evaluation of the same closed forms.
  struct Row {
    BoundaryKind g;
    SpecialPoint x;
    const char* v[3];
  };
  const auto E = BoundaryKind::ReflectingEven;
  const auto O = BoundaryKind::ReflectingOdd;
  const Row rows[] = {
      {E, SpecialPoint::MinusOne,
       {"-0.9547712524422192276756357339256119888957", "0.125", "0.7953675877612837199859194802440784087114"}},
      {E, SpecialPoint::Zero,
       {"-0.5232481437645478365168072249348708416405", "-0.5", "0.1796737554634369496149155005169080647861"}},
      {E, SpecialPoint::Two,
       {"0.4315231086776713911588285089907411472553", "0.125", "-0.1706052232394377923783698048838511102791"}},
      {E, SpecialPoint::Half,
       {"-0.2616240718822739182584036124674354208202", "-0.2083333333333333333333333333333333333333",
        "-0.4362089283530146262230143578231347996845"}},
      {O, SpecialPoint::MinusOne,
       {"-0.9547712524422192276756357339256119888957", "-0.375", "-0.127800945663570053437838448245839313115"}},
      {O, SpecialPoint::Zero,
       {"-0.5232481437645478365168072249348708416405", "-0.1666666666666666666666666666666666666667",
        "-0.09705712541871980919283720588705365000256"}},
      {O, SpecialPoint::Two,
       {"0.4315231086776713911588285089907411472553", "-0.04166666666666666666666666666666666666667",
        "0.00516328178261860137585015289884819063329"}},
      {O, SpecialPoint::Half,
       {"-0.2616240718822739182584036124674354208202", "-0.04166666666666666666666666666666666666667",
        "0.00516328178261860137585015289884819063329"}},
  };
  for (const auto& row : rows) {
    const ConstantTriple t = strip_constants(row.g, row.x, kBits);
    CHECK(near(t.g0, R(row.v[0]), "1e-38"));
    CHECK(near(t.g1, R(row.v[1]), "1e-38"));
    CHECK(near(t.g2, R(row.v[2]), "1e-38"));
    CHECK(near(t.g0, g_coeff(row.g, 0, Real(kBits, special_point_value(row.x))), "1e-60"));
    CHECK(near(t.g1, g_coeff(row.g, 1, Real(kBits, special_point_value(row.x))), "1e-60"));
  }
  CHECK_THROWS_AS(strip_constants(E, SpecialPoint::One, kBits), std::domain_error);
  CHECK_THROWS_AS(strip_constants(BoundaryKind::PeriodicEven, SpecialPoint::Zero, kBits), std::invalid_argument);
}
