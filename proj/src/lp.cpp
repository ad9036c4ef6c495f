#include "cosys/lp.hpp"

#include <algorithm>
#include <sstream>

#include "cosys/errors.hpp"

namespace cosys {

namespace {

void validate(const LinearProgram& p) {
  if (p.bounds.size() != p.objective.size())
    throw Error(ErrorKind::OutOfRange, "bounds/objective length mismatch");
  for (const auto& c : p.constraints)
    if (c.coeffs.size() != p.objective.size())
      throw Error(ErrorKind::OutOfRange, "constraint width mismatch");
}

// Standard-form tableau. Original >= rows are negated to <=; each row then
// gets a slack, rows with negative rhs are negated once more (recorded in
// sigma), and every row without a usable identity column gets an artificial.
struct Simplex {
  const LinearProgram& p;
  std::size_t nvar;                    // original variables
  std::vector<int> pos_col, neg_col;   // expansion of each variable
  std::size_t nstruct = 0;             // expanded structural columns
  std::vector<int> slack_col;          // per original row, -1 for '='
  std::vector<int> art_col;            // per original row, -1 if none
  std::vector<Rational> sigma;         // per original row: +1 or -1
  std::size_t ncols = 0;
  std::size_t art_start = 0;  // artificial columns occupy [art_start, ncols)

  std::vector<std::vector<Rational>> T;  // active rows over all columns
  std::vector<Rational> rhs;
  std::vector<Rational> rc;  // reduced costs c_j - z_j
  Rational val;
  std::vector<int> basic;     // per active row: basic column
  std::vector<int> row_orig;  // per active row: original constraint index

  explicit Simplex(const LinearProgram& prog) : p(prog) { build(); }

  void build() {
    nvar = p.variable_count();
    pos_col.assign(nvar, -1);
    neg_col.assign(nvar, -1);
    std::size_t col = 0;
    for (std::size_t j = 0; j < nvar; ++j) {
      pos_col[j] = (int)col++;
      if (p.bounds[j] == VarBound::Free) neg_col[j] = (int)col++;
    }
    nstruct = col;
    std::size_t m = p.constraints.size();
    slack_col.assign(m, -1);
    art_col.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i)
      if (p.constraints[i].rel != Relation::Equal) slack_col[i] = (int)col++;
    std::size_t first_art = col;
    sigma.assign(m, Rational(1));

    // assemble rows; decide artificials after signs are settled
    std::vector<std::vector<Rational>> rows(m);
    std::vector<Rational> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = p.constraints[i];
      Rational flip(c.rel == Relation::GreaterEq ? -1 : 1);  // >= becomes <=
      std::vector<Rational> row(first_art, Rational(0));
      for (std::size_t j = 0; j < nvar; ++j) {
        row[pos_col[j]] = flip * c.coeffs[j];
        if (neg_col[j] >= 0) row[neg_col[j]] = -flip * c.coeffs[j];
      }
      if (slack_col[i] >= 0) row[slack_col[i]] = Rational(1);
      Rational bi = flip * c.rhs;
      if (bi < Rational(0)) {
        sigma[i] = -flip;  // net sign applied to the original row
        for (auto& x : row) x = -x;
        bi = -bi;
      } else {
        sigma[i] = flip;
      }
      rows[i] = std::move(row);
      b[i] = std::move(bi);
    }
    // a slack that kept coefficient +1 serves as the identity column
    art_start = col;
    for (std::size_t i = 0; i < m; ++i) {
      bool slack_ok = slack_col[i] >= 0 && rows[i][slack_col[i]] == Rational(1);
      if (!slack_ok) art_col[i] = (int)col++;
    }
    ncols = col;
    T.assign(m, {});
    rhs = std::move(b);
    basic.assign(m, -1);
    row_orig.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      rows[i].resize(ncols, Rational(0));
      if (art_col[i] >= 0) {
        rows[i][art_col[i]] = Rational(1);
        basic[i] = art_col[i];
      } else {
        basic[i] = slack_col[i];
      }
      T[i] = std::move(rows[i]);
      row_orig[i] = (int)i;
    }
  }

  bool is_artificial(int j) const { return (std::size_t)j >= art_start; }

  void set_costs(const std::vector<Rational>& c) {
    rc = c;
    val = Rational(0);
    for (std::size_t r = 0; r < T.size(); ++r) {
      const Rational& cb = c[basic[r]];
      if (cb == Rational(0)) continue;
      for (std::size_t j = 0; j < ncols; ++j) rc[j] -= cb * T[r][j];
      val += cb * rhs[r];
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    Rational piv = T[r][j];
    for (std::size_t k = 0; k < ncols; ++k) T[r][k] /= piv;
    rhs[r] /= piv;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (i == r || T[i][j] == Rational(0)) continue;
      Rational f = T[i][j];
      for (std::size_t k = 0; k < ncols; ++k) T[i][k] -= f * T[r][k];
      rhs[i] -= f * rhs[r];
    }
    if (rc[j] != Rational(0)) {
      Rational f = rc[j];
      for (std::size_t k = 0; k < ncols; ++k) rc[k] -= f * T[r][k];
      val += f * rhs[r];
    }
    basic[r] = (int)j;
  }

  // Bland: entering = lowest eligible index with rc > 0; leaving = min ratio,
  // ties by smallest basic column. Returns entering column on unboundedness.
  int run(bool allow_artificial) {
    for (;;) {
      int enter = -1;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (!allow_artificial && is_artificial((int)j)) continue;
        if (rc[j] > Rational(0)) {
          enter = (int)j;
          break;
        }
      }
      if (enter < 0) return -1;  // optimal
      int leave = -1;
      Rational best;
      for (std::size_t r = 0; r < T.size(); ++r) {
        if (T[r][enter] <= Rational(0)) continue;
        Rational ratio = rhs[r] / T[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basic[r] < basic[leave])) {
          leave = (int)r;
          best = ratio;
        }
      }
      if (leave < 0) return enter;  // unbounded along this column
      pivot((std::size_t)leave, (std::size_t)enter);
    }
  }

  // after phase 1: pivot basic artificials out, drop redundant rows
  void drive_out_artificials() {
    for (std::size_t r = 0; r < T.size();) {
      if (!is_artificial(basic[r])) {
        ++r;
        continue;
      }
      int j = -1;
      for (std::size_t k = 0; k < ncols && j < 0; ++k)
        if (!is_artificial((int)k) && T[r][k] != Rational(0)) j = (int)k;
      if (j >= 0) {
        pivot(r, (std::size_t)j);
        ++r;
      } else {  // all-zero row: the original constraint is redundant
        T.erase(T.begin() + (long)r);
        rhs.erase(rhs.begin() + (long)r);
        basic.erase(basic.begin() + (long)r);
        row_orig.erase(row_orig.begin() + (long)r);
      }
    }
  }

  // multiplier of original row i under costs behind the current rc row
  Rational dual_of_row(std::size_t i, const std::vector<Rational>& costs) const {
    Rational ytilde;
    if (art_col[i] >= 0) {
      ytilde = costs[art_col[i]] - rc[art_col[i]];
    } else {
      // slack was the identity column: y~_i = c_slack - rc_slack
      ytilde = costs[slack_col[i]] - rc[slack_col[i]];
    }
    return sigma[i] * ytilde;
  }

  std::vector<Rational> primal_solution() const {
    std::vector<Rational> xbar(ncols, Rational(0));
    for (std::size_t r = 0; r < T.size(); ++r) xbar[basic[r]] = rhs[r];
    std::vector<Rational> x(nvar);
    for (std::size_t j = 0; j < nvar; ++j) {
      x[j] = xbar[pos_col[j]];
      if (neg_col[j] >= 0) x[j] -= xbar[neg_col[j]];
    }
    return x;
  }

  std::vector<Rational> ray_solution(int enter) const {
    std::vector<Rational> xbar(ncols, Rational(0));
    xbar[enter] = Rational(1);
    for (std::size_t r = 0; r < T.size(); ++r) xbar[basic[r]] = -T[r][enter];
    std::vector<Rational> x(nvar);
    for (std::size_t j = 0; j < nvar; ++j) {
      x[j] = xbar[pos_col[j]];
      if (neg_col[j] >= 0) x[j] -= xbar[neg_col[j]];
    }
    return x;
  }
};

}  // namespace

LpOutcome solve(const LinearProgram& p) {
  validate(p);
  Simplex s(p);
  std::size_t m = p.constraints.size();

  // phase 1: maximize minus the sum of artificials
  std::vector<Rational> c1(s.ncols, Rational(0));
  bool any_art = false;
  for (std::size_t i = 0; i < m; ++i)
    if (s.art_col[i] >= 0) {
      c1[s.art_col[i]] = Rational(-1);
      any_art = true;
    }
  if (any_art) {
    s.set_costs(c1);
    s.run(true);
    if (s.val < Rational(0)) {
      std::vector<Rational> farkas(m);
      for (std::size_t i = 0; i < m; ++i)
        farkas[i] = s.dual_of_row(i, c1);
      return LpInfeasible{std::move(farkas)};
    }
    s.drive_out_artificials();
  }

  // phase 2: the real objective over expanded structural columns
  std::vector<Rational> c2(s.ncols, Rational(0));
  for (std::size_t j = 0; j < s.nvar; ++j) {
    c2[s.pos_col[j]] = p.objective[j];
    if (s.neg_col[j] >= 0) c2[s.neg_col[j]] = -p.objective[j];
  }
  s.set_costs(c2);
  int enter = s.run(false);
  if (enter >= 0) return LpUnbounded{s.ray_solution(enter)};

  std::vector<Rational> dual(m, Rational(0));
  for (int i : s.row_orig) dual[i] = s.dual_of_row((std::size_t)i, c2);
  return LpOptimal{s.val, s.primal_solution(), std::move(dual)};
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool check_optimal(const LinearProgram& p, const LpOptimal& o) {
  std::size_t n = p.variable_count(), m = p.constraints.size();
  if (o.primal.size() != n || o.dual.size() != m) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (p.bounds[j] == VarBound::NonNegative && o.primal[j] < Rational(0))
      return false;
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = p.constraints[i];
    Rational lhs = dot(c.coeffs, o.primal);
    switch (c.rel) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        if (o.dual[i] < Rational(0)) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        if (o.dual[i] > Rational(0)) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  // dual feasibility: sum_i y_i a_ij >= c_j, equality on free variables
  for (std::size_t j = 0; j < n; ++j) {
    Rational w;
    for (std::size_t i = 0; i < m; ++i)
      w += o.dual[i] * p.constraints[i].coeffs[j];
    Rational slack = w - p.objective[j];
    if (p.bounds[j] == VarBound::Free ? slack != Rational(0)
                                      : slack < Rational(0))
      return false;
  }
  Rational primal_val = dot(p.objective, o.primal);
  Rational dual_val;
  for (std::size_t i = 0; i < m; ++i) dual_val += o.dual[i] * p.constraints[i].rhs;
  return primal_val == o.value && dual_val == o.value;
}

bool check_infeasible(const LinearProgram& p, const LpInfeasible& o) {
  std::size_t n = p.variable_count(), m = p.constraints.size();
  if (o.farkas.size() != m) return false;
  Rational yb;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& y = o.farkas[i];
    switch (p.constraints[i].rel) {
      case Relation::LessEq:
        if (y < Rational(0)) return false;
        break;
      case Relation::GreaterEq:
        if (y > Rational(0)) return false;
        break;
      case Relation::Equal:
        break;
    }
    yb += y * p.constraints[i].rhs;
  }
  if (yb >= Rational(0)) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Rational w;
    for (std::size_t i = 0; i < m; ++i)
      w += o.farkas[i] * p.constraints[i].coeffs[j];
    if (p.bounds[j] == VarBound::Free ? w != Rational(0) : w < Rational(0))
      return false;
  }
  return true;
}

bool check_unbounded(const LinearProgram& p, const LpUnbounded& o) {
  std::size_t n = p.variable_count(), m = p.constraints.size();
  if (o.ray.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (p.bounds[j] == VarBound::NonNegative && o.ray[j] < Rational(0))
      return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rational g = dot(p.constraints[i].coeffs, o.ray);
    switch (p.constraints[i].rel) {
      case Relation::LessEq:
        if (g > Rational(0)) return false;
        break;
      case Relation::GreaterEq:
        if (g < Rational(0)) return false;
        break;
      case Relation::Equal:
        if (g != Rational(0)) return false;
        break;
    }
  }
  return dot(p.objective, o.ray) > Rational(0);
}

}  // namespace

bool verify_certificates(const LinearProgram& p, const LpOutcome& o) {
  validate(p);
  if (const auto* opt = std::get_if<LpOptimal>(&o)) return check_optimal(p, *opt);
  if (const auto* inf = std::get_if<LpInfeasible>(&o)) return check_infeasible(p, *inf);
  return check_unbounded(p, std::get<LpUnbounded>(o));
}

std::string to_text(const LinearProgram& p) {
  std::ostringstream os;
  os << "maximize";
  for (const auto& c : p.objective) os << " " << c.str();
  os << "\n";
  for (const auto& con : p.constraints) {
    for (const auto& c : con.coeffs) os << c.str() << " ";
    os << (con.rel == Relation::LessEq    ? "<="
           : con.rel == Relation::Equal   ? "="
                                          : ">=")
       << " " << con.rhs.str() << "\n";
  }
  return os.str();
}

}  // namespace cosys
