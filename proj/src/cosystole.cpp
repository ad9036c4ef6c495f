#include "cosys/cosystole.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "cosys/errors.hpp"
#include "cosys/lp.hpp"

namespace cosys {

// ---------------------------------------------------------------------------
// WeightVector

namespace {

void validate_weights(const std::vector<Rational>& vals) {
  Rational total;
  for (const auto& v : vals) {
    if (v < Rational(0)) throw Error(ErrorKind::InvalidWeight, "negative weight");
    total += v;
  }
  if (total == Rational(0))
    throw Error(ErrorKind::ZeroTotalWeight, "weights sum to zero");
}

}  // namespace

WeightVector WeightVector::uniform(const BinaryMatroid& m) {
  if (m.size() == 0) throw Error(ErrorKind::ZeroTotalWeight, "empty ground set");
  return {m.labels(),
          std::vector<Rational>(m.size(), Rational(1, (long)m.size()))};
}

WeightVector WeightVector::from_values(const BinaryMatroid& m,
                                       std::vector<Rational> vals) {
  if (vals.size() != m.size())
    throw Error(ErrorKind::GroundSetMismatch, "weight count != element count");
  validate_weights(vals);
  return {m.labels(), std::move(vals)};
}

WeightVector WeightVector::from_map(const BinaryMatroid& m,
                                    const std::map<std::string, Rational>& vals) {
  std::vector<Rational> v(m.size(), Rational(0));
  for (const auto& [label, val] : vals) v[m.index_of(label)] = val;
  validate_weights(v);
  return {m.labels(), std::move(v)};
}

Rational WeightVector::total() const {
  Rational t;
  for (const auto& v : values) t += v;
  return t;
}

// ---------------------------------------------------------------------------

Rational weight_of(const WeightVector& mu, const ElementSet& x) {
  if (x.universe() != mu.values.size())
    throw Error(ErrorKind::GroundSetMismatch, "set universe != weight length");
  Rational t;
  for (std::size_t i : x.members()) t += mu.values[i];
  return t;
}

bool is_admissible(const ElementSet& c1, const ElementSet& c2, const ElementSet& c3) {
  return !c1.subset_of(c2 | c3) && !c2.subset_of(c1 | c3) && !c3.subset_of(c1 | c2);
}

std::vector<AdmissibleTriple> admissible_triples(const BinaryMatroid& m) {
  const auto& cocs = m.cocircuits();
  std::size_t n = cocs.size();
  std::vector<BitRow> masks(n);
  for (std::size_t i = 0; i < n; ++i) masks[i] = cocs[i].bits();
  std::vector<AdmissibleTriple> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      BitRow uij = masks[i] | masks[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        BitRow mk = masks[k];
        if ((mk | uij) != uij && (masks[i] | (masks[j] | mk)) != (masks[j] | mk) &&
            (masks[j] | (masks[i] | mk)) != (masks[i] | mk))
          out.push_back({(int)i, (int)j, (int)k});
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Weighted invariants

namespace {

void check_association(const BinaryMatroid& m, const WeightVector& mu) {
  if (mu.labels != m.labels())
    throw Error(ErrorKind::GroundSetMismatch, "weights are for a different ground set");
}

Rational positive_total(const WeightVector& mu) {
  Rational t = mu.total();
  if (t == Rational(0)) throw Error(ErrorKind::ZeroTotalWeight, "total weight is zero");
  return t;
}

std::vector<Rational> cocircuit_weights(const std::vector<ElementSet>& cocs,
                                        const std::vector<Rational>& mu) {
  std::vector<Rational> w(cocs.size());
  for (std::size_t i = 0; i < cocs.size(); ++i) {
    BitRow bits = cocs[i].bits();
    Rational t;
    while (bits) {
      int e = __builtin_ctzll(bits);
      bits &= bits - 1;
      t += mu[(std::size_t)e];
    }
    w[i] = std::move(t);
  }
  return w;
}

int thread_budget() {
  const char* env = std::getenv("COSYS_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v < 1 ? 1 : v;
}

// (min over triples of W[a]+W[b]+W[c], first index attaining it); the
// parallel split reduces per-chunk results in chunk order with strict
// comparison, matching the sequential scan exactly.
std::pair<Rational, std::size_t> min_triple_weight(
    const std::vector<AdmissibleTriple>& triples, const std::vector<Rational>& w) {
  auto scan = [&](std::size_t lo, std::size_t hi) {
    std::size_t arg = lo;
    Rational best = w[(std::size_t)triples[lo].a] + w[(std::size_t)triples[lo].b] +
                    w[(std::size_t)triples[lo].c];
    for (std::size_t i = lo + 1; i < hi; ++i) {
      Rational v = w[(std::size_t)triples[i].a] + w[(std::size_t)triples[i].b] +
                   w[(std::size_t)triples[i].c];
      if (v < best) {
        best = std::move(v);
        arg = i;
      }
    }
    return std::make_pair(std::move(best), arg);
  };
  std::size_t n = triples.size();
  int nt = thread_budget();
  if (nt > 1 && n / (std::size_t)nt > 512) {
    std::size_t chunk = (n + (std::size_t)nt - 1) / (std::size_t)nt;
    std::vector<std::pair<Rational, std::size_t>> part((std::size_t)nt);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      std::size_t lo = (std::size_t)t * chunk, hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, t, lo, hi] { part[(std::size_t)t] = scan(lo, hi); });
    }
    std::size_t used = pool.size();
    for (auto& th : pool) th.join();
    auto best = std::move(part[0]);
    for (std::size_t t = 1; t < used; ++t)
      if (part[t].first < best.first) best = std::move(part[t]);
    return best;
  }
  return scan(0, n);
}

}  // namespace

Rational sys_weighted(const BinaryMatroid& m, const WeightVector& mu) {
  check_association(m, mu);
  const auto& cocs = m.cocircuits();
  if (cocs.empty()) throw Error(ErrorKind::NoCocircuits, "matroid has rank zero");
  Rational total = positive_total(mu);
  auto w = cocircuit_weights(cocs, mu.values);
  return *std::min_element(w.begin(), w.end()) / total;
}

Rational sys3_weighted(const BinaryMatroid& m, const WeightVector& mu) {
  check_association(m, mu);
  auto triples = admissible_triples(m);
  if (triples.empty())
    throw Error(ErrorKind::NoAdmissibleTriple, "no admissible cocircuit triple");
  Rational total = positive_total(mu);
  auto w = cocircuit_weights(m.cocircuits(), mu.values);
  return min_triple_weight(triples, w).first / total;
}

// ---------------------------------------------------------------------------
// LP-backed maxima

namespace {

// variables mu_0..mu_{n-1} >= 0 plus free t (last); maximize t;
// row 0: sum mu = 1; one `a . mu - t >= 0` row per given coefficient vector.
LinearProgram minimax_lp(std::size_t n, const std::vector<std::vector<Rational>>& rows) {
  LinearProgram lp;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[n] = Rational(1);
  lp.bounds.assign(n + 1, VarBound::NonNegative);
  lp.bounds[n] = VarBound::Free;
  Constraint sum;
  sum.coeffs.assign(n + 1, Rational(1));
  sum.coeffs[n] = Rational(0);
  sum.rel = Relation::Equal;
  sum.rhs = Rational(1);
  lp.constraints.push_back(std::move(sum));
  for (const auto& a : rows) {
    Constraint c;
    c.coeffs = a;
    c.coeffs.push_back(Rational(-1));
    c.rel = Relation::GreaterEq;
    c.rhs = Rational(0);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

const LpOptimal& expect_optimal(const LpOutcome& out) {
  const auto* opt = std::get_if<LpOptimal>(&out);
  if (!opt) throw std::logic_error("cosystole LP must have an optimum");
  return *opt;
}

}  // namespace

InvariantResult sys_star(const BinaryMatroid& m) {
  const auto& cocs = m.cocircuits();
  if (cocs.empty()) throw Error(ErrorKind::NoCocircuits, "matroid has rank zero");
  std::size_t n = m.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : cocs) {
    std::vector<Rational> a(n, Rational(0));
    for (std::size_t e : c.members()) a[e] = Rational(1);
    rows.push_back(std::move(a));
  }
  LpOutcome out = solve(minimax_lp(n, rows));
  const LpOptimal& opt = expect_optimal(out);
  InvariantResult r;
  r.value = opt.value;
  r.optimal_weights = {m.labels(),
                       std::vector<Rational>(opt.primal.begin(),
                                             opt.primal.begin() + (long)n)};
  for (std::size_t i = 0; i < cocs.size(); ++i) {
    Rational lambda = -opt.dual[i + 1];
    if (lambda != Rational(0)) r.dual.push_back({{(int)i}, std::move(lambda)});
  }
  r.active_constraints = (int)cocs.size();
  return r;
}

InvariantResult sys3_star(const BinaryMatroid& m) {
  auto triples = admissible_triples(m);
  if (triples.empty())
    throw Error(ErrorKind::NoAdmissibleTriple, "no admissible cocircuit triple");
  const auto& cocs = m.cocircuits();
  std::size_t n = m.size();

  // seed: the admissible triple of least total cardinality, earliest first
  std::size_t seed = 0, seed_card = SIZE_MAX;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    std::size_t card = cocs[(std::size_t)triples[i].a].count() +
                       cocs[(std::size_t)triples[i].b].count() +
                       cocs[(std::size_t)triples[i].c].count();
    if (card < seed_card) {
      seed_card = card;
      seed = i;
    }
  }

  auto triple_row = [&](const AdmissibleTriple& t) {
    std::vector<Rational> a(n, Rational(0));
    for (int idx : {t.a, t.b, t.c})
      for (std::size_t e : cocs[(std::size_t)idx].members()) a[e] += Rational(1);
    return a;
  };

  std::vector<std::size_t> active = {seed};
  std::vector<std::vector<Rational>> rows = {triple_row(triples[seed])};
  for (;;) {
    LpOutcome out = solve(minimax_lp(n, rows));
    const LpOptimal& opt = expect_optimal(out);
    std::vector<Rational> mu(opt.primal.begin(), opt.primal.begin() + (long)n);
    auto w = cocircuit_weights(cocs, mu);
    auto [sep_min, sep_arg] = min_triple_weight(triples, w);
    if (sep_min >= opt.value) {
      InvariantResult r;
      r.value = opt.value;
      r.optimal_weights = {m.labels(), std::move(mu)};
      std::vector<std::pair<std::size_t, Rational>> lams;
      for (std::size_t k = 0; k < active.size(); ++k) {
        Rational lambda = -opt.dual[k + 1];
        if (lambda != Rational(0)) lams.emplace_back(active[k], std::move(lambda));
      }
      std::sort(lams.begin(), lams.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& [ti, lambda] : lams)
        r.dual.push_back(
            {{triples[ti].a, triples[ti].b, triples[ti].c}, std::move(lambda)});
      r.active_constraints = (int)active.size();
      return r;
    }
    active.push_back(sep_arg);
    rows.push_back(triple_row(triples[sep_arg]));
  }
}

// ---------------------------------------------------------------------------
// Certificates

bool check_lower_certificate(const BinaryMatroid& m, const WeightVector& mu,
                             const Rational& bound) {
  return sys3_weighted(m, mu) >= bound;
}

Rational check_upper_certificate(const BinaryMatroid& m,
                                 const std::map<AdmissibleTriple, Rational>& lambda) {
  const auto& cocs = m.cocircuits();
  Rational total;
  for (const auto& [t, lam] : lambda) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || (std::size_t)t.c >= cocs.size() ||
        t.a >= t.b || t.b >= t.c)
      throw Error(ErrorKind::NotAdmissible, "bad cocircuit indices");
    if (!is_admissible(cocs[(std::size_t)t.a], cocs[(std::size_t)t.b],
                       cocs[(std::size_t)t.c]))
      throw Error(ErrorKind::NotAdmissible, "triple violates non-inclusion");
    if (lam < Rational(0))
      throw Error(ErrorKind::NotNormalized, "negative multiplier");
    total += lam;
  }
  if (total != Rational(1))
    throw Error(ErrorKind::NotNormalized, "multipliers must sum to 1");
  Rational best;
  for (std::size_t e = 0; e < m.size(); ++e) {
    Rational s;
    for (const auto& [t, lam] : lambda) {
      int mult = (int)cocs[(std::size_t)t.a].contains(e) +
                 (int)cocs[(std::size_t)t.b].contains(e) +
                 (int)cocs[(std::size_t)t.c].contains(e);
      if (mult) s += lam * Rational(mult);
    }
    if (s > best) best = std::move(s);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Text formats

WeightVector parse_weight_file(const BinaryMatroid& m, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::map<std::string, Rational> vals;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string label, num;
    if (!(ls >> label)) continue;  // blank line
    if (!(ls >> num)) throw Error(ErrorKind::Parse, "weight line needs a value");
    std::string extra;
    if (ls >> extra) throw Error(ErrorKind::Parse, "trailing tokens on weight line");
    m.index_of(label);  // throws UnknownElement for foreign labels
    if (!vals.emplace(label, Rational::parse(num)).second)
      throw Error(ErrorKind::Parse, "duplicate weight for " + label);
  }
  return WeightVector::from_map(m, vals);
}

std::string certificate_text(const BinaryMatroid& m, const InvariantResult& r) {
  std::ostringstream os;
  os << "value " << r.value.str() << "\n";
  os << "weights\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    os << m.label(i) << " " << r.optimal_weights.values[i].str() << "\n";
  os << "dual\n";
  const auto& cocs = m.cocircuits();
  for (const auto& d : r.dual) {
    os << (d.cocircuits.size() == 1 ? "cocircuit" : "triple");
    for (int ci : d.cocircuits) os << " " << render(cocs[(std::size_t)ci], m);
    os << " " << d.multiplier.str() << "\n";
  }
  return os.str();
}

namespace {

ElementSet parse_braced_set(const BinaryMatroid& m, const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
    throw Error(ErrorKind::Parse, "expected {a,b,...} set");
  std::vector<std::string> labels;
  std::string body = tok.substr(1, tok.size() - 2);
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      labels.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) labels.push_back(cur);
  return m.set_of(labels);
}

}  // namespace

ParsedCertificate parse_certificate(const BinaryMatroid& m, const std::string& text) {
  std::istringstream is(text);
  std::string word;
  ParsedCertificate out;
  if (!(is >> word) || word != "value" || !(is >> word))
    throw Error(ErrorKind::Parse, "certificate must start with 'value <p/q>'");
  out.value = Rational::parse(word);
  if (!(is >> word) || word != "weights")
    throw Error(ErrorKind::Parse, "expected 'weights' block");
  std::map<std::string, Rational> vals;
  while (is >> word && word != "dual") {
    std::string num;
    if (!(is >> num)) throw Error(ErrorKind::Parse, "weight line needs a value");
    vals.emplace(word, Rational::parse(num));
  }
  out.weights = WeightVector::from_map(m, vals);
  while (is >> word) {
    std::size_t k = word == "triple" ? 3 : word == "cocircuit" ? 1 : 0;
    if (k == 0) throw Error(ErrorKind::Parse, "expected 'triple' or 'cocircuit'");
    std::vector<ElementSet> sets;
    for (std::size_t i = 0; i < k; ++i) {
      std::string tok;
      if (!(is >> tok)) throw Error(ErrorKind::Parse, "truncated dual line");
      sets.push_back(parse_braced_set(m, tok));
    }
    std::string num;
    if (!(is >> num)) throw Error(ErrorKind::Parse, "dual line needs a multiplier");
    out.dual.emplace_back(std::move(sets), Rational::parse(num));
  }
  return out;
}

}  // namespace cosys
