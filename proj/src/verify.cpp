#include "cosys/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cosys/catalog.hpp"
#include "cosys/cosystole.hpp"
#include "cosys/errors.hpp"
#include "cosys/graph.hpp"

namespace cosys {

namespace {

struct Runner {
  VerificationReport report;

  void check(const std::string& name, const std::string& expected,
             const std::function<std::pair<bool, std::string>()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string actual;
    try {
      auto [p, a] = fn();
      pass = p;
      actual = a;
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    long ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report.checks.push_back({name, pass, expected, actual, ms});
  }
};

// Shared per-suite cache so values/inequality checks solve each LP once.
struct EntryCache {
  std::map<std::string, CatalogEntry> entries;
  std::map<std::string, InvariantResult> sys3;
  std::map<std::string, InvariantResult> sys1;

  const CatalogEntry& entry(const std::string& name) {
    auto it = entries.find(name);
    if (it == entries.end()) it = entries.emplace(name, catalog_get(name)).first;
    return it->second;
  }
  const InvariantResult& sys3_of(const std::string& name) {
    auto it = sys3.find(name);
    if (it == sys3.end()) it = sys3.emplace(name, sys3_star(entry(name).matroid)).first;
    return it->second;
  }
  const InvariantResult& sys_of(const std::string& name) {
    auto it = sys1.find(name);
    if (it == sys1.end()) it = sys1.emplace(name, sys_star(entry(name).matroid)).first;
    return it->second;
  }
};

std::vector<std::string> rank6_names(EntryCache& cache) {
  std::vector<std::string> out;
  for (const auto& n : catalog_names())
    if (cache.entry(n).matroid.rank() == 6) out.push_back(n);
  return out;
}

void values_suite(Runner& r, EntryCache& cache) {
  static const std::vector<std::pair<std::string, Rational>> table = {
      {"M_K4", Rational(3, 2)},      {"M_K5", Rational(6, 5)},
      {"M_K6", Rational(1)},         {"M_K7", Rational(6, 7)},
      {"Mstar_K33", Rational(4, 3)}, {"Mstar_G53", Rational(12, 11)},
      {"Mstar_G54", Rational(9, 8)}, {"R10", Rational(6, 5)},
      {"P_K3_R10", Rational(12, 13)}, {"R16", Rational(12, 13)},
      {"Mstar_G1", Rational(1)}};
  for (const auto& [name, want] : table)
    r.check("sys3_star(" + name + ")", want.str(), [&, n = name, w = want] {
      const Rational& got = cache.sys3_of(n).value;
      return std::make_pair(got == w, got.str());
    });
  r.check("sys3_star(Mstar_Gi) <= 1 for all census graphs", "<= 1", [&] {
    Rational worst;
    std::string arg;
    for (int i = 1; i <= 9; ++i) {
      std::string n = "Mstar_G" + std::to_string(i);
      const Rational& v = cache.sys3_of(n).value;
      if (v > worst) {
        worst = v;
        arg = n;
      }
    }
    return std::make_pair(worst <= Rational(1), "max " + worst.str() + " at " + arg);
  });
  r.check("sys_star(Mstar_G1)", "1/3", [&] {
    const Rational& got = cache.sys_of("Mstar_G1").value;
    return std::make_pair(got == Rational(1, 3), got.str());
  });
  r.check("sys_star <= 1/3 on rank-6 entries", "<= 1/3", [&] {
    Rational worst;
    std::string arg;
    for (const auto& n : rank6_names(cache)) {
      const Rational& v = cache.sys_of(n).value;
      if (v > worst) {
        worst = v;
        arg = n;
      }
    }
    return std::make_pair(worst <= Rational(1, 3), "max " + worst.str() + " at " + arg);
  });
  r.check("sys_star(Mstar_G53) > 1/4", "> 1/4", [&] {
    const Rational& got = cache.sys_of("Mstar_G53").value;
    return std::make_pair(got > Rational(1, 4), got.str());
  });
  r.check("sys3_star >= 3 sys_star on every entry", "holds on all", [&] {
    for (const auto& n : catalog_names()) {
      if (admissible_triples(cache.entry(n).matroid).empty()) continue;
      if (cache.sys3_of(n).value < Rational(3) * cache.sys_of(n).value)
        return std::make_pair(false, "fails at " + n);
    }
    return std::make_pair(true, std::string("holds on all"));
  });
  r.check("sys_star >= cogirth/|E| on every entry", "holds on all", [&] {
    for (const auto& n : catalog_names()) {
      const BinaryMatroid& m = cache.entry(n).matroid;
      Rational bound((long)m.cogirth(), (long)m.size());
      if (cache.sys_of(n).value < bound)
        return std::make_pair(false, "fails at " + n);
    }
    return std::make_pair(true, std::string("holds on all"));
  });
}

void census_suite(Runner& r) {
  r.check("cubic connected classes on 8 vertices", "5", [] {
    std::size_t k = generate_cubic_connected(8).size();
    return std::make_pair(k == 5, std::to_string(k));
  });
  r.check("cubic connected classes on 10 vertices", "19", [] {
    std::size_t k = generate_cubic_connected(10).size();
    return std::make_pair(k == 19, std::to_string(k));
  });
  r.check("3ec non-planar cubic graphs on 8 vertices", "2 with girths {3,4}", [] {
    auto gs = census_msr_cographic(8);
    if (gs.size() != 2) return std::make_pair(false, std::to_string(gs.size()) + " graphs");
    std::multiset<int> girths = {girth(gs[0]), girth(gs[1])};
    bool ok = girths == std::multiset<int>{3, 4};
    std::ostringstream os;
    os << gs.size() << " with girths {" << *girths.begin() << "," << *girths.rbegin() << "}";
    return std::make_pair(ok, os.str());
  });
  r.check("3ec non-planar cubic graphs on 10 vertices", "9", [] {
    std::size_t k = census_msr_cographic(10).size();
    return std::make_pair(k == 9, std::to_string(k));
  });
  r.check("frozen census graphs regenerate", "canonical forms match", [] {
    std::multiset<std::string> gen8, gen10, frozen8, frozen10;
    for (const auto& g : census_msr_cographic(8)) gen8.insert(graph_canonical_form(g));
    for (const auto& g : census_msr_cographic(10)) gen10.insert(graph_canonical_form(g));
    for (const auto& n : {"G53", "G54"})
      frozen8.insert(graph_canonical_form(frozen_graph(n)));
    for (int i = 1; i <= 9; ++i)
      frozen10.insert(graph_canonical_form(frozen_graph("G" + std::to_string(i))));
    bool ok = gen8 == frozen8 && gen10 == frozen10;
    return std::make_pair(ok, ok ? "canonical forms match" : "mismatch");
  });
}

void lemma_g7_suite(Runner& r) {
  r.check("R16 \\ f spectra for f in 1..12", "size-3 cocircuit and >= 5 of size <= 4", [] {
    BinaryMatroid r16 = catalog_get("R16").matroid;
    for (int f = 1; f <= 12; ++f) {
      BinaryMatroid del = r16.deletion(std::to_string(f));
      int small = 0;
      bool has3 = false;
      for (const auto& c : del.cocircuits()) {
        if (c.count() == 3) has3 = true;
        if (c.count() <= 4) ++small;
      }
      if (!has3 || small < 5)
        return std::make_pair(false, "fails at f=" + std::to_string(f));
    }
    return std::make_pair(true, std::string("size-3 cocircuit and >= 5 of size <= 4"));
  });
  r.check("census graphs with a 3-cycle and >= 5 cycles of size <= 4", "1", [] {
    int hits = 0;
    for (const auto& g : census_msr_cographic(10)) {
      auto cs = cycles(g);
      int c3 = 0, c4 = 0;
      for (const auto& c : cs) {
        if (c.size() == 3) ++c3;
        if (c.size() <= 4) ++c4;
      }
      if (c3 >= 1 && c4 >= 5) ++hits;
    }
    return std::make_pair(hits == 1, std::to_string(hits));
  });
  r.check("R16 \\ 7 isomorphic to Mstar_G7", "bijection found", [] {
    BinaryMatroid del = catalog_get("R16").matroid.deletion("7");
    bool ok = isomorphism(del, catalog_get("Mstar_G7").matroid).has_value();
    return std::make_pair(ok, ok ? "bijection found" : "not isomorphic");
  });
}

void constructions_suite(Runner& r) {
  r.check("parallel_connection(M_K3, R10) ~ P_K3_R10", "isomorphic", [] {
    BinaryMatroid mk3 = graphic_matroid(complete_graph(3));
    BinaryMatroid pc = parallel_connection(mk3, catalog_get("R10").matroid, "0-1", "f2");
    bool ok = isomorphism(pc, catalog_get("P_K3_R10").matroid).has_value();
    return std::make_pair(ok, ok ? "isomorphic" : "not isomorphic");
  });
  r.check("gpc_triangle(M_K5, Mstar_K33) ~ R16", "isomorphic", [] {
    BinaryMatroid mk5 = catalog_get("M_K5").matroid;
    BinaryMatroid mk33 = catalog_get("Mstar_K33").matroid;
    BinaryMatroid gpc = generalized_parallel_connection_triangle(
        mk5, mk33, {"0-1", "0-2", "1-2"}, {"0-3", "0-4", "0-5"});
    bool ok = isomorphism(gpc, catalog_get("R16").matroid).has_value();
    return std::make_pair(ok, ok ? "isomorphic" : "not isomorphic");
  });
}

// One check per entry: sys3_star(M\e) <= sys3_star(M) <= sys3_star(M/e) at
// every applicable element; plus the simplification-equality checks.
void monotonicity_suite(Runner& r, EntryCache& cache) {
  for (const auto& name : catalog_names()) {
    const CatalogEntry& e = cache.entry(name);
    std::size_t rank = e.matroid.rank();
    if (rank < 4 || rank > 6) continue;
    r.check("monotonicity at every applicable element of " + name, "holds", [&, name] {
      const BinaryMatroid& m = cache.entry(name).matroid;
      Rational mid = cache.sys3_of(name).value;
      int used = 0;
      for (const auto& lab : m.labels()) {
        if (m.is_coloop(lab)) continue;
        BinaryMatroid del = m.deletion(lab);
        BinaryMatroid con = m.contraction(lab);
        if (con.rank() < 3) continue;
        if (admissible_triples(del).empty() || admissible_triples(con).empty())
          continue;
        ++used;
        if (sys3_star(del).value > mid)
          return std::make_pair(false, "deletion of " + lab + " increases the value");
        if (sys3_star(con).value < mid)
          return std::make_pair(false, "contraction of " + lab + " decreases the value");
      }
      return std::make_pair(true, "holds (" + std::to_string(used) + " elements)");
    });
  }
  static const std::vector<std::string> si_members = {"M_K4", "M_K5", "Mstar_K33",
                                                      "Mstar_G53", "R10"};
  std::mt19937 rng(20250825);
  for (const auto& name : si_members) {
    std::size_t cols = cache.entry(name).matroid.size();
    std::vector<std::size_t> dup;
    for (int i = 0; i < 3; ++i)
      dup.push_back(std::uniform_int_distribution<std::size_t>(0, cols - 1)(rng));
    r.check("sys3_star unchanged by simplification of extended " + name, "equal", [&, name, dup] {
      const BinaryMatroid& m = cache.entry(name).matroid;
      const Gf2Matrix& rep = m.representation();
      Gf2Matrix ext(rep.rows(), rep.cols() + 5);
      for (std::size_t rr = 0; rr < rep.rows(); ++rr)
        for (std::size_t c = 0; c < rep.cols(); ++c)
          if (rep.get(rr, c)) ext.set(rr, c, true);
      std::vector<std::string> labels = m.labels();
      for (int i = 0; i < 3; ++i) {  // parallel copies of random columns
        std::size_t src = dup[(std::size_t)i], dst = rep.cols() + (std::size_t)i;
        for (std::size_t rr = 0; rr < rep.rows(); ++rr)
          if (rep.get(rr, src)) ext.set(rr, dst, true);
        labels.push_back("par" + std::to_string(i));
      }
      labels.push_back("loop0");  // the two remaining columns stay zero
      labels.push_back("loop1");
      BinaryMatroid extended(ext, labels);
      Rational a = sys3_star(extended).value;
      Rational b = sys3_star(extended.simplify().matroid).value;
      Rational c = cache.sys3_of(name).value;
      bool ok = a == b && b == c;
      return std::make_pair(ok, ok ? "equal" : a.str() + " vs " + b.str());
    });
  }
}

}  // namespace

VerificationReport run_suite(const std::string& suite) {
  Runner r;
  EntryCache cache;
  if (suite == "values") {
    values_suite(r, cache);
  } else if (suite == "census") {
    census_suite(r);
  } else if (suite == "lemmaG7") {
    lemma_g7_suite(r);
  } else if (suite == "monotonicity") {
    monotonicity_suite(r, cache);
  } else if (suite == "all") {
    values_suite(r, cache);
    census_suite(r);
    lemma_g7_suite(r);
    constructions_suite(r);
    monotonicity_suite(r, cache);
  } else {
    throw Error(ErrorKind::UnknownName, "unknown suite " + suite);
  }
  return r.report;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  expected: " << c.expected
       << "  actual: " << c.actual << "  (" << c.elapsed_ms << " ms)\n";
  os << (r.overall() ? "OVERALL PASS" : "OVERALL FAIL") << " (" << r.checks.size()
     << " checks)\n";
  return os.str();
}

}  // namespace cosys
