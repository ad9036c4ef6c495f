#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cosys/rational.hpp"

namespace cosys {

enum class Relation { LessEq, Equal, GreaterEq };
enum class VarBound { NonNegative, Free };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

// maximize objective . x subject to the constraints and per-variable bounds
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<VarBound> bounds;
  std::vector<Constraint> constraints;

  std::size_t variable_count() const { return objective.size(); }
};

struct LpOptimal {
  Rational value;
  std::vector<Rational> primal;  // one entry per variable
  std::vector<Rational> dual;    // one entry per constraint
};

struct LpInfeasible {
  std::vector<Rational> farkas;  // one entry per constraint
};

struct LpUnbounded {
  std::vector<Rational> ray;  // one entry per variable
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// Two-phase dense simplex over Rational with Bland's pivoting rule;
// deterministic, exact, certificate-producing.
LpOutcome solve(const LinearProgram& p);

// Re-checks the outcome against the program with exact arithmetic only:
// feasibility and strong duality for Optimal, the sign/combination conditions
// for Farkas vectors, feasible-direction conditions for rays.
bool verify_certificates(const LinearProgram& p, const LpOutcome& o);

// Debug dump, one constraint per line with p/q coefficients.
std::string to_text(const LinearProgram& p);

}  // namespace cosys
