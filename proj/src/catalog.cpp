#include "cosys/catalog.hpp"

#include <map>
#include <set>

#include "cosys/errors.hpp"

namespace cosys {

const std::vector<std::string>& a12_rows() {
  static const std::vector<std::string> rows = {
      "110000000000", "101000011001", "000100011100",
      "000010001110", "000001000111", "000000110011"};
  return rows;
}

const std::vector<std::string>& a16_rows() {
  static const std::vector<std::string> rows = {
      "1000001110001100", "0100001101001100", "0010001000100001",
      "0001000100010001", "0000100010110110", "0000010001110110"};
  return rows;
}

namespace {

using Pairs = std::vector<std::pair<int, int>>;

const std::map<std::string, std::pair<int, Pairs>>& frozen_graphs() {
  static const std::map<std::string, std::pair<int, Pairs>> data = {
      {"G1", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7},
                   {3, 8}, {3, 9}, {4, 6}, {4, 8}, {5, 7}, {5, 9}, {6, 9}, {7, 8}}}},
      {"G2", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 6},
                   {3, 7}, {4, 6}, {4, 7}, {5, 8}, {5, 9}, {6, 8}, {7, 9}, {8, 9}}}},
      {"G3", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 6},
                   {3, 7}, {4, 6}, {4, 8}, {5, 6}, {5, 9}, {7, 8}, {7, 9}, {8, 9}}}},
      {"G4", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 6},
                   {3, 7}, {4, 6}, {4, 8}, {5, 7}, {5, 9}, {6, 9}, {7, 8}, {8, 9}}}},
      {"G5", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5},
                   {3, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}}}},
      {"G6", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6},
                   {3, 5}, {3, 7}, {4, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}}}},
      {"G7", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4},
                   {3, 6}, {4, 7}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 8}, {7, 9}}}},
      {"G8", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6},
                   {3, 5}, {3, 7}, {4, 8}, {5, 9}, {6, 7}, {6, 9}, {7, 8}, {8, 9}}}},
      {"G9", {10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6},
                   {3, 7}, {3, 8}, {4, 7}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 9}}}},
      {"G53", {8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 6},
                   {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}}}},
      {"G54", {8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6},
                   {3, 5}, {3, 7}, {4, 7}, {5, 6}, {6, 7}}}},
  };
  return data;
}

std::vector<std::string> range_labels(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

BinaryMatroid a12_matroid(const std::string& name) {
  return BinaryMatroid(Gf2Matrix::from_strings(a12_rows()),
                       range_labels("f", 0, 11), name);
}

BinaryMatroid a16_matroid(const std::string& name) {
  return BinaryMatroid(Gf2Matrix::from_strings(a16_rows()),
                       range_labels("", 1, 16), name);
}

BinaryMatroid r10_matroid() {
  // rows v1..v5 and columns f2..f11 of the 6 x 12 matrix
  std::vector<std::string> rows;
  for (std::size_t r = 1; r <= 5; ++r) rows.push_back(a12_rows()[r].substr(2));
  return BinaryMatroid(Gf2Matrix::from_strings(rows), range_labels("f", 2, 11),
                       "R10");
}

BinaryMatroid r12_matroid() {
  std::vector<std::string> rows;
  for (const auto& r : a16_rows()) rows.push_back(r.substr(0, 12));
  return BinaryMatroid(Gf2Matrix::from_strings(rows), range_labels("", 1, 12),
                       "R12");
}

BinaryMatroid named_cographic(const std::string& graph_name,
                              const std::string& name) {
  Graph g = frozen_graph(graph_name);
  BinaryMatroid m = cographic_matroid(g);
  return BinaryMatroid(m.representation(), m.labels(), name);
}

WeightVector weight_by_index(const BinaryMatroid& m,
                             const std::vector<std::pair<std::vector<int>, Rational>>& groups) {
  std::vector<Rational> vals(m.size(), Rational(0));
  for (const auto& [idxs, v] : groups)
    for (int i : idxs) vals[(std::size_t)i] = v;
  return WeightVector::from_values(m, vals);
}

CatalogEntry build(const std::string& name) {
  CatalogEntry e{name, BinaryMatroid(Gf2Matrix(0, 0), {}), {}, {}, {}};
  if (name == "M_K4" || name == "M_K5" || name == "M_K6" || name == "M_K7") {
    int n = name[3] - '0';
    BinaryMatroid m = graphic_matroid(complete_graph(n));
    e.matroid = BinaryMatroid(m.representation(), m.labels(), name);
    static const std::map<std::string, std::pair<Rational, int>> vals = {
        {"M_K4", {Rational(3, 2), 3}},
        {"M_K5", {Rational(6, 5), 4}},
        {"M_K6", {Rational(1), 5}},
        {"M_K7", {Rational(6, 7), 6}}};
    e.expected_sys3 = vals.at(name).first;
    e.expected_cogirth = vals.at(name).second;
  } else if (name == "Mstar_K3") {
    BinaryMatroid m = cographic_matroid(complete_graph(3));
    e.matroid = BinaryMatroid(m.representation(), m.labels(), name);
    e.expected_cogirth = 3;
  } else if (name == "Mstar_K33") {
    BinaryMatroid m = cographic_matroid(complete_bipartite(3, 3));
    e.matroid = BinaryMatroid(m.representation(), m.labels(), name);
    e.expected_sys3 = Rational(4, 3);
    e.expected_cogirth = 4;
  } else if (name == "Mstar_G53") {
    e.matroid = named_cographic("G53", name);
    e.expected_sys3 = Rational(12, 11);
    e.expected_cogirth = 3;
    e.named_weights.emplace_back(
        "mu431", weight_by_index(e.matroid, {{{0, 1, 3}, Rational(4, 33)},
                                             {{6, 7, 8, 9, 10, 11}, Rational(3, 33)},
                                             {{2, 4, 5}, Rational(1, 33)}}));
  } else if (name == "Mstar_G54") {
    e.matroid = named_cographic("G54", name);
    e.expected_sys3 = Rational(9, 8);
    e.expected_cogirth = 4;
    e.named_weights.emplace_back(
        "mu12", weight_by_index(e.matroid, {{{1, 2, 3, 4, 6, 8, 9, 10}, Rational(1, 16)},
                                            {{0, 5, 7, 11}, Rational(2, 16)}}));
  } else if (name == "R10") {
    e.matroid = r10_matroid();
    e.expected_sys3 = Rational(6, 5);
    e.expected_cogirth = 4;
  } else if (name == "R12") {
    e.matroid = r12_matroid();
    e.expected_cogirth = 3;
  } else if (name == "P_K3_R10") {
    e.matroid = a12_matroid(name);
    e.expected_sys3 = Rational(12, 13);
    e.expected_cogirth = 2;
    e.named_weights.emplace_back(
        "mu201",
        weight_by_index(e.matroid, {{{0, 1}, Rational(2, 13)},
                                    {{3, 4, 5, 6, 7, 8, 9, 10, 11}, Rational(1, 13)}}));
  } else if (name == "R16") {
    e.matroid = a16_matroid(name);
    e.expected_sys3 = Rational(12, 13);
    e.expected_cogirth = 4;
    std::vector<int> ones;
    for (int i = 0; i < 16; ++i)
      if (i < 12 || i > 14) ones.push_back(i);  // columns 13,14,15 carry 0
    e.named_weights.emplace_back(
        "mu_r16", weight_by_index(e.matroid, {{ones, Rational(1, 13)}}));
  } else if (name.rfind("Mstar_G", 0) == 0 && name.size() == 8) {
    e.matroid = named_cographic(name.substr(6), name);
    static const std::map<std::string, int> cg = {
        {"Mstar_G1", 5}, {"Mstar_G2", 3}, {"Mstar_G3", 3},
        {"Mstar_G4", 3}, {"Mstar_G5", 4}, {"Mstar_G6", 4},
        {"Mstar_G7", 3}, {"Mstar_G8", 4}, {"Mstar_G9", 4}};
    e.expected_cogirth = cg.at(name);
    if (name == "Mstar_G1") e.expected_sys3 = Rational(1);
  } else {
    throw Error(ErrorKind::UnknownName, "no catalog entry named " + name);
  }
  e.named_weights.emplace_back("mu1", WeightVector::uniform(e.matroid));
  return e;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "M_K4",     "M_K5",     "M_K6",     "M_K7",     "Mstar_K33", "Mstar_G53",
      "Mstar_G54", "R10",     "R12",      "P_K3_R10", "R16",       "Mstar_G1",
      "Mstar_G2", "Mstar_G3", "Mstar_G4", "Mstar_G5", "Mstar_G6",  "Mstar_G7",
      "Mstar_G8", "Mstar_G9", "Mstar_K3"};
  return names;
}

CatalogEntry catalog_get(const std::string& name) { return build(name); }

Graph frozen_graph(const std::string& name) {
  auto it = frozen_graphs().find(name);
  if (it == frozen_graphs().end())
    throw Error(ErrorKind::UnknownName, "no frozen graph named " + name);
  return graph_from_pairs(it->second.first, it->second.second);
}

// ---------------------------------------------------------------------------
// Connections

namespace {

BitRow column_mask(const Gf2Matrix& rep, std::size_t c) {
  BitRow m = 0;
  for (std::size_t r = 0; r < rep.rows(); ++r)
    if (rep.get(r, c)) m |= BitRow(1) << r;
  return m;
}

// row operations moving column `c` to the standard basis vector e_target,
// assuming rows 0..target-1 already hold pinned basis columns with column c
// clear there only after elimination
void pivot_column(std::vector<BitRow>& rows, std::size_t c, std::size_t target) {
  std::size_t pivot = SIZE_MAX;
  for (std::size_t r = target; r < rows.size(); ++r)
    if ((rows[r] >> c) & 1) {
      pivot = r;
      break;
    }
  if (pivot == SIZE_MAX) throw std::logic_error("no pivot row for column");
  std::swap(rows[target], rows[pivot]);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (r != target && ((rows[r] >> c) & 1)) rows[r] ^= rows[target];
}

std::vector<std::string> merge_labels(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::set<std::string> used(a.begin(), a.end());
  std::vector<std::string> out = a;
  for (const auto& l : b) {
    std::string x = l;
    while (used.count(x)) x += "'";
    used.insert(x);
    out.push_back(x);
  }
  return out;
}

}  // namespace

BinaryMatroid parallel_connection(const BinaryMatroid& m, const BinaryMatroid& n,
                                  const std::string& p_m, const std::string& p_n) {
  std::size_t p = m.index_of(p_m), q = n.index_of(p_n);
  if (m.is_loop(p_m) || n.is_loop(p_n))
    throw Error(ErrorKind::LoopBasepoint, "basepoint must not be a loop");
  std::vector<BitRow> ra = m.representation().row_words();
  std::vector<BitRow> rb = n.representation().row_words();
  pivot_column(ra, p, 0);
  pivot_column(rb, q, 0);
  std::size_t rm = ra.size(), rn = rb.size();
  std::size_t nm = m.size(), nn = n.size();
  Gf2Matrix glued(rm + rn - 1, nm + nn - 1);
  for (std::size_t r = 0; r < rm; ++r)
    for (std::size_t c = 0; c < nm; ++c)
      if ((ra[r] >> c) & 1) glued.set(r, c, true);
  std::size_t cc = nm;
  for (std::size_t c = 0; c < nn; ++c) {
    if (c == q) continue;
    for (std::size_t r = 0; r < rn; ++r)
      if ((rb[r] >> c) & 1) glued.set(r == 0 ? 0 : rm - 1 + r, cc, true);
    ++cc;
  }
  std::vector<std::string> nl = n.labels();
  nl.erase(nl.begin() + (long)q);
  return BinaryMatroid(glued, merge_labels(m.labels(), nl));
}

BinaryMatroid generalized_parallel_connection_triangle(
    const BinaryMatroid& m, const BinaryMatroid& n,
    const std::array<std::string, 3>& t_m, const std::array<std::string, 3>& t_n) {
  std::array<std::size_t, 3> tm{}, tn{};
  for (int i = 0; i < 3; ++i) {
    tm[(std::size_t)i] = m.index_of(t_m[(std::size_t)i]);
    tn[(std::size_t)i] = n.index_of(t_n[(std::size_t)i]);
  }
  auto is_triangle = [](const BinaryMatroid& x, const std::array<std::size_t, 3>& t) {
    BitRow c0 = column_mask(x.representation(), t[0]);
    BitRow c1 = column_mask(x.representation(), t[1]);
    BitRow c2 = column_mask(x.representation(), t[2]);
    return c0 && c1 && c2 && c0 != c1 && c0 != c2 && c1 != c2 &&
           (c0 ^ c1 ^ c2) == 0;
  };
  if (!is_triangle(m, tm) || !is_triangle(n, tn))
    throw Error(ErrorKind::NotATriangle, "labels must form a 3-element circuit");
  std::vector<BitRow> ra = m.representation().row_words();
  std::vector<BitRow> rb = n.representation().row_words();
  pivot_column(ra, tm[0], 0);
  pivot_column(ra, tm[1], 1);
  pivot_column(rb, tn[0], 0);
  pivot_column(rb, tn[1], 1);
  std::size_t rm = ra.size(), rn = rb.size();
  std::size_t nm = m.size(), nn = n.size();
  Gf2Matrix glued(rm + rn - 2, nm + nn - 3);
  for (std::size_t r = 0; r < rm; ++r)
    for (std::size_t c = 0; c < nm; ++c)
      if ((ra[r] >> c) & 1) glued.set(r, c, true);
  std::size_t cc = nm;
  for (std::size_t c = 0; c < nn; ++c) {
    if (c == tn[0] || c == tn[1] || c == tn[2]) continue;
    for (std::size_t r = 0; r < rn; ++r)
      if ((rb[r] >> c) & 1) glued.set(r < 2 ? r : rm - 2 + r, cc, true);
    ++cc;
  }
  std::vector<std::string> nl;
  for (std::size_t c = 0; c < nn; ++c)
    if (c != tn[0] && c != tn[1] && c != tn[2]) nl.push_back(n.labels()[c]);
  return BinaryMatroid(glued, merge_labels(m.labels(), nl));
}

}  // namespace cosys
