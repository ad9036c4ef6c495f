#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <variant>

#include "cosys/catalog.hpp"
#include "cosys/cosystole.hpp"
#include "cosys/errors.hpp"
#include "cosys/lp.hpp"
#include "cosys/matroid.hpp"

using namespace cosys;

namespace {

LinearProgram single_free_var() {
  // maximize t subject to t <= 1, t free
  LinearProgram p;
  p.objective = {Rational(1)};
  p.bounds = {VarBound::Free};
  p.constraints.push_back({{Rational(1)}, Relation::LessEq, Rational(1)});
  return p;
}

std::string primal_dual_string(const LpOptimal& o) {
  std::ostringstream os;
  os << o.value.str();
  for (const auto& v : o.primal) os << " " << v.str();
  os << " |";
  for (const auto& v : o.dual) os << " " << v.str();
  return os.str();
}

}  // namespace

TEST_CASE("one variable, one constraint") {
  LpOutcome out = solve(single_free_var());
  auto* opt = std::get_if<LpOptimal>(&out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == Rational(1));
  CHECK(opt->primal == std::vector<Rational>{Rational(1)});
  CHECK(opt->dual == std::vector<Rational>{Rational(1)});
  CHECK(verify_certificates(single_free_var(), out));
}

TEST_CASE("infeasible system yields a Farkas certificate") {
  // x >= 2 and x <= 1 with x >= 0
  LinearProgram p;
  p.objective = {Rational(0)};
  p.bounds = {VarBound::NonNegative};
  p.constraints.push_back({{Rational(1)}, Relation::GreaterEq, Rational(2)});
  p.constraints.push_back({{Rational(1)}, Relation::LessEq, Rational(1)});
  LpOutcome out = solve(p);
  REQUIRE(std::holds_alternative<LpInfeasible>(out));
  CHECK(verify_certificates(p, out));
}

TEST_CASE("unbounded program yields a ray") {
  // maximize x with only x >= 3: increase x forever
  LinearProgram p;
  p.objective = {Rational(1)};
  p.bounds = {VarBound::NonNegative};
  p.constraints.push_back({{Rational(1)}, Relation::GreaterEq, Rational(3)});
  LpOutcome out = solve(p);
  REQUIRE(std::holds_alternative<LpUnbounded>(out));
  CHECK(verify_certificates(p, out));

  // two variables, free one drives the objective
  LinearProgram q;
  q.objective = {Rational(0), Rational(1)};
  q.bounds = {VarBound::NonNegative, VarBound::Free};
  q.constraints.push_back(
      {{Rational(1), Rational(0)}, Relation::LessEq, Rational(5)});
  LpOutcome out2 = solve(q);
  REQUIRE(std::holds_alternative<LpUnbounded>(out2));
  CHECK(verify_certificates(q, out2));
}

TEST_CASE("equalities and mixed relations") {
  // maximize x + y subject to x + y = 2, x - y <= 1, x,y >= 0
  LinearProgram p;
  p.objective = {Rational(1), Rational(1)};
  p.bounds = {VarBound::NonNegative, VarBound::NonNegative};
  p.constraints.push_back(
      {{Rational(1), Rational(1)}, Relation::Equal, Rational(2)});
  p.constraints.push_back(
      {{Rational(1), Rational(-1)}, Relation::LessEq, Rational(1)});
  LpOutcome out = solve(p);
  auto* opt = std::get_if<LpOptimal>(&out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == Rational(2));
  CHECK(verify_certificates(p, out));
}

TEST_CASE("negative right-hand sides") {
  // maximize -x subject to -x <= -3  (i.e. x >= 3): optimum -3
  LinearProgram p;
  p.objective = {Rational(-1)};
  p.bounds = {VarBound::NonNegative};
  p.constraints.push_back({{Rational(-1)}, Relation::LessEq, Rational(-3)});
  LpOutcome out = solve(p);
  auto* opt = std::get_if<LpOptimal>(&out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == Rational(-3));
  CHECK(opt->primal == std::vector<Rational>{Rational(3)});
  CHECK(verify_certificates(p, out));
}

TEST_CASE("fractional data stays exact") {
  // maximize x/3 + y/7 subject to x/2 + y/5 <= 1/11, x,y >= 0
  LinearProgram p;
  p.objective = {Rational(1, 3), Rational(1, 7)};
  p.bounds = {VarBound::NonNegative, VarBound::NonNegative};
  p.constraints.push_back(
      {{Rational(1, 2), Rational(1, 5)}, Relation::LessEq, Rational(1, 11)});
  LpOutcome out = solve(p);
  auto* opt = std::get_if<LpOptimal>(&out);
  REQUIRE(opt != nullptr);
  // best ratio: (1/3)/(1/2) = 2/3 vs (1/7)/(1/5) = 5/7; pick y
  CHECK(opt->value == Rational(5, 77));
  CHECK(verify_certificates(p, out));
}

TEST_CASE("minimax program for M(K4) reaches 3/2") {
  BinaryMatroid m = catalog_get("M_K4").matroid;
  InvariantResult r = sys3_star(m);
  CHECK(r.value == Rational(3, 2));
}

TEST_CASE("corrupted certificates are rejected") {
  LinearProgram p = single_free_var();
  LpOutcome out = solve(p);
  auto opt = std::get<LpOptimal>(out);

  LpOptimal off_value = opt;
  off_value.value = opt.value + Rational(1, 1000000);
  CHECK(!verify_certificates(p, LpOutcome{off_value}));

  LpOptimal off_primal = opt;
  off_primal.primal[0] = Rational(2);  // violates t <= 1
  CHECK(!verify_certificates(p, LpOutcome{off_primal}));

  LpOptimal off_dual = opt;
  off_dual.dual[0] = Rational(1, 2);  // dual infeasible for a free variable
  CHECK(!verify_certificates(p, LpOutcome{off_dual}));

  // wrong-size vectors
  LpOptimal off_size = opt;
  off_size.primal.push_back(Rational(0));
  CHECK(!verify_certificates(p, LpOutcome{off_size}));

  // Farkas vector with broken signs
  LinearProgram inf;
  inf.objective = {Rational(0)};
  inf.bounds = {VarBound::NonNegative};
  inf.constraints.push_back({{Rational(1)}, Relation::GreaterEq, Rational(2)});
  inf.constraints.push_back({{Rational(1)}, Relation::LessEq, Rational(1)});
  LpOutcome inf_out = solve(inf);
  auto farkas = std::get<LpInfeasible>(inf_out);
  LpInfeasible bad = farkas;
  for (auto& v : bad.farkas) v = -v;
  CHECK(!verify_certificates(inf, LpOutcome{bad}));

  // zero ray is not a certificate of unboundedness
  LinearProgram unb;
  unb.objective = {Rational(1)};
  unb.bounds = {VarBound::NonNegative};
  unb.constraints.push_back({{Rational(1)}, Relation::GreaterEq, Rational(3)});
  LpUnbounded zero_ray{{Rational(0)}};
  CHECK(!verify_certificates(unb, LpOutcome{zero_ray}));
}

TEST_CASE("duals price the constraints (strong duality)") {
  // maximize 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x,y >= 0 → (4,0), value 12
  LinearProgram p;
  p.objective = {Rational(3), Rational(2)};
  p.bounds = {VarBound::NonNegative, VarBound::NonNegative};
  p.constraints.push_back(
      {{Rational(1), Rational(1)}, Relation::LessEq, Rational(4)});
  p.constraints.push_back(
      {{Rational(1), Rational(3)}, Relation::LessEq, Rational(6)});
  LpOutcome out = solve(p);
  auto* opt = std::get_if<LpOptimal>(&out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == Rational(12));
  Rational dual_value = opt->dual[0] * Rational(4) + opt->dual[1] * Rational(6);
  CHECK(dual_value == opt->value);
  CHECK(verify_certificates(p, out));
}

TEST_CASE("solver is deterministic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    LinearProgram p;
    int nv = 3 + trial % 3, nc = 2 + trial % 4;
    for (int j = 0; j < nv; ++j) {
      p.objective.emplace_back(num(rng), den(rng));
      p.bounds.push_back(trial % 2 && j == 0 ? VarBound::Free
                                             : VarBound::NonNegative);
    }
    for (int i = 0; i < nc; ++i) {
      Constraint c;
      for (int j = 0; j < nv; ++j) c.coeffs.emplace_back(num(rng), den(rng));
      c.rel = i % 3 == 0   ? Relation::LessEq
              : i % 3 == 1 ? Relation::GreaterEq
                           : Relation::Equal;
      c.rhs = Rational(num(rng) + 7, den(rng));
      p.constraints.push_back(c);
    }
    LpOutcome a = solve(p), b = solve(p);
    CHECK(verify_certificates(p, a));
    REQUIRE(a.index() == b.index());
    if (auto* ao = std::get_if<LpOptimal>(&a))
      CHECK(primal_dual_string(*ao) == primal_dual_string(std::get<LpOptimal>(b)));
  }
}

TEST_CASE("dimension mismatches are rejected") {
  LinearProgram p;
  p.objective = {Rational(1)};
  p.bounds = {VarBound::NonNegative, VarBound::NonNegative};  // wrong length
  CHECK_THROWS_AS((void)solve(p), Error);

  LinearProgram q;
  q.objective = {Rational(1)};
  q.bounds = {VarBound::NonNegative};
  q.constraints.push_back(
      {{Rational(1), Rational(2)}, Relation::LessEq, Rational(1)});
  CHECK_THROWS_AS((void)solve(q), Error);
}

TEST_CASE("to_text renders the program") {
  LinearProgram p = single_free_var();
  std::string s = to_text(p);
  CHECK(s.find("max") != std::string::npos);
  CHECK(s.find("<=") != std::string::npos);
}
