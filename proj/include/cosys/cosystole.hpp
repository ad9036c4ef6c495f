#pragma once

#include <map>
#include <string>
#include <vector>

#include "cosys/matroid.hpp"
#include "cosys/rational.hpp"

namespace cosys {

// Nonnegative weights on a ground set, aligned with a matroid's label order.
// All constructors enforce: every weight >= 0 and the total is positive.
struct WeightVector {
  std::vector<std::string> labels;
  std::vector<Rational> values;

  static WeightVector uniform(const BinaryMatroid& m);
  static WeightVector from_values(const BinaryMatroid& m, std::vector<Rational> vals);
  static WeightVector from_map(const BinaryMatroid& m,
                               const std::map<std::string, Rational>& vals);

  Rational total() const;
};

// Three distinct cocircuit indices, stored sorted.
struct AdmissibleTriple {
  int a = 0, b = 0, c = 0;

  friend bool operator<(const AdmissibleTriple& x, const AdmissibleTriple& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
  friend bool operator==(const AdmissibleTriple& x, const AdmissibleTriple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// One dual multiplier: a single cocircuit index for sys*, three for sys3*.
struct DualEntry {
  std::vector<int> cocircuits;
  Rational multiplier;
};

struct InvariantResult {
  Rational value;
  WeightVector optimal_weights;   // lower certificate
  std::vector<DualEntry> dual;    // upper certificate, multipliers sum to 1
  int active_constraints = 0;     // rows in the final LP (besides the simplex row)
};

Rational weight_of(const WeightVector& mu, const ElementSet& x);

bool is_admissible(const ElementSet& c1, const ElementSet& c2, const ElementSet& c3);

std::vector<AdmissibleTriple> admissible_triples(const BinaryMatroid& m);

// min over cocircuits C of mu(C)/mu(E)
Rational sys_weighted(const BinaryMatroid& m, const WeightVector& mu);

// min over admissible triples of (mu(C1)+mu(C2)+mu(C3))/mu(E)
Rational sys3_weighted(const BinaryMatroid& m, const WeightVector& mu);

// max of sys_weighted over probability weights, one-shot LP over cocircuits
InvariantResult sys_star(const BinaryMatroid& m);

// max of sys3_weighted over probability weights, LP with constraint
// generation over admissible triples
InvariantResult sys3_star(const BinaryMatroid& m);

bool check_lower_certificate(const BinaryMatroid& m, const WeightVector& mu,
                             const Rational& bound);

// Returns B = max over elements e of sum_T lambda(T) * (cocircuits of T
// containing e); by averaging, sys3_star(m) <= B.
Rational check_upper_certificate(const BinaryMatroid& m,
                                 const std::map<AdmissibleTriple, Rational>& lambda);

// Weight file: one `<label> <p/q>` line per element; missing labels are 0.
WeightVector parse_weight_file(const BinaryMatroid& m, const std::string& text);

// Certificate text: `value <p/q>`, a `weights` block, and a `dual` block of
// `triple {A} {B} {C} <p/q>` (or `cocircuit {A} <p/q>`) lines.
std::string certificate_text(const BinaryMatroid& m, const InvariantResult& r);

struct ParsedCertificate {
  Rational value;
  WeightVector weights;
  std::vector<std::pair<std::vector<ElementSet>, Rational>> dual;
};

ParsedCertificate parse_certificate(const BinaryMatroid& m, const std::string& text);

}  // namespace cosys
