#include "cosys/matroid.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "cosys/errors.hpp"

namespace cosys {

ElementSet::ElementSet(BitRow bits, std::size_t universe)
    : bits_(bits), universe_(universe) {
  BitRow mask = universe == 64 ? ~BitRow(0) : (BitRow(1) << universe) - 1;
  if (bits & ~mask)
    throw Error(ErrorKind::OutOfRange, "element set has members beyond its universe");
}

ElementSet ElementSet::of(std::initializer_list<std::size_t> members,
                          std::size_t universe) {
  BitRow b = 0;
  for (std::size_t i : members) b |= BitRow(1) << i;
  return ElementSet(b, universe);
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

static void check_universe(const ElementSet& a, const ElementSet& b) {
  if (a.universe() != b.universe())
    throw Error(ErrorKind::GroundSetMismatch, "element sets over different ground sets");
}

bool ElementSet::subset_of(const ElementSet& o) const {
  check_universe(*this, o);
  return (bits_ & ~o.bits_) == 0;
}

ElementSet operator|(const ElementSet& a, const ElementSet& b) {
  check_universe(a, b);
  return ElementSet(a.bits_ | b.bits_, a.universe_);
}

ElementSet operator&(const ElementSet& a, const ElementSet& b) {
  check_universe(a, b);
  return ElementSet(a.bits_ & b.bits_, a.universe_);
}

BinaryMatroid::BinaryMatroid(const Gf2Matrix& rep, std::vector<std::string> labels,
                             std::string name)
    : labels_(std::move(labels)), name_(std::move(name)) {
  if (labels_.size() != rep.cols())
    throw Error(ErrorKind::Parse, "label count must equal column count");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw Error(ErrorKind::Parse, "duplicate element label '" + labels_[i] + "'");
  rep_ = rref(rep).matrix;
}

BinaryMatroid::BinaryMatroid(const BinaryMatroid& o)
    : rep_(o.rep_), labels_(o.labels_), name_(o.name_) {
  std::lock_guard<std::mutex> lk(o.cache_mu_);
  cocircuits_ = o.cocircuits_;
}

BinaryMatroid& BinaryMatroid::operator=(const BinaryMatroid& o) {
  if (this == &o) return *this;
  std::optional<std::vector<ElementSet>> cache;
  {
    std::lock_guard<std::mutex> lk(o.cache_mu_);
    cache = o.cocircuits_;
  }
  rep_ = o.rep_;
  labels_ = o.labels_;
  name_ = o.name_;
  std::lock_guard<std::mutex> lk(cache_mu_);
  cocircuits_ = std::move(cache);
  return *this;
}

std::size_t BinaryMatroid::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorKind::UnknownElement, "no element '" + label + "'");
}

static bool set_less(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  auto ma = a.members(), mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

const std::vector<ElementSet>& BinaryMatroid::cocircuits() const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  if (!cocircuits_) {
    std::vector<BitRow> vecs = row_space_vectors(rep_);
    std::vector<ElementSet> out;
    for (BitRow v : vecs) {
      bool minimal = true;
      for (BitRow w : vecs)
        if (w != v && (w & ~v) == 0) {
          minimal = false;
          break;
        }
      if (minimal) out.emplace_back(v, size());
    }
    std::sort(out.begin(), out.end(), set_less);
    cocircuits_ = std::move(out);
  }
  return *cocircuits_;
}

std::vector<ElementSet> BinaryMatroid::circuits() const { return dual().cocircuits(); }

std::size_t BinaryMatroid::subset_rank(const ElementSet& x) const {
  if (x.universe() != size())
    throw Error(ErrorKind::GroundSetMismatch, "subset over a different ground set");
  // xor-basis over column vectors (bits over row index), one slot per top bit
  BitRow slot[64] = {};
  std::size_t r = 0;
  for (std::size_t j : x.members()) {
    BitRow col = 0;
    for (std::size_t i = 0; i < rep_.rows(); ++i)
      if (rep_.get(i, j)) col |= BitRow(1) << i;
    while (col) {
      int top = 63 - __builtin_clzll(col);
      if (!slot[top]) {
        slot[top] = col;
        ++r;
        break;
      }
      col ^= slot[top];
    }
  }
  return r;
}

std::size_t BinaryMatroid::cogirth() const {
  const auto& cocs = cocircuits();
  if (cocs.empty()) throw Error(ErrorKind::NoCocircuits, "rank-0 matroid has no cocircuits");
  return cocs.front().count();  // sorted by cardinality first
}

static Gf2Matrix drop_column(const Gf2Matrix& m, std::size_t j) {
  std::vector<BitRow> rows;
  BitRow low = (BitRow(1) << j) - 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitRow r = m.row(i);
    rows.push_back((r & low) | ((r >> (j + 1)) << j));
  }
  return Gf2Matrix::from_rows(std::move(rows), m.cols() - 1);
}

BinaryMatroid BinaryMatroid::deletion(const std::string& e) const {
  std::size_t j = index_of(e);
  std::vector<std::string> labels = labels_;
  labels.erase(labels.begin() + j);
  return BinaryMatroid(drop_column(rep_, j), std::move(labels));
}

BinaryMatroid BinaryMatroid::contraction(const std::string& e) const {
  std::size_t j = index_of(e);
  if (is_loop(e)) return deletion(e);
  std::vector<BitRow> rows = rep_.row_words();
  std::size_t piv = 0;
  while (!((rows[piv] >> j) & 1)) ++piv;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (i != piv && ((rows[i] >> j) & 1)) rows[i] ^= rows[piv];
  rows.erase(rows.begin() + piv);
  std::vector<std::string> labels = labels_;
  labels.erase(labels.begin() + j);
  return BinaryMatroid(drop_column(Gf2Matrix::from_rows(std::move(rows), size()), j),
                       std::move(labels));
}

BinaryMatroid BinaryMatroid::dual() const {
  return BinaryMatroid(dual_representation(rep_), labels_);
}

Simplification BinaryMatroid::simplify() const {
  std::vector<std::size_t> keep;
  std::vector<BitRow> seen;
  for (std::size_t j = 0; j < size(); ++j) {
    BitRow col = 0;
    for (std::size_t i = 0; i < rep_.rows(); ++i)
      if (rep_.get(i, j)) col |= BitRow(1) << i;
    if (col == 0) continue;  // loop
    if (std::find(seen.begin(), seen.end(), col) != seen.end()) continue;
    seen.push_back(col);
    keep.push_back(j);
  }
  Gf2Matrix sub(rep_.rows(), keep.size());
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> kept;
  for (std::size_t t = 0; t < keep.size(); ++t) {
    for (std::size_t i = 0; i < rep_.rows(); ++i)
      if (rep_.get(i, keep[t])) sub.set(i, t, true);
    labels.push_back(labels_[keep[t]]);
    kept.emplace_back(labels_[keep[t]], labels_[keep[t]]);
  }
  return Simplification{BinaryMatroid(sub, std::move(labels)), std::move(kept)};
}

bool BinaryMatroid::is_loop(const std::string& e) const {
  std::size_t j = index_of(e);
  for (std::size_t i = 0; i < rep_.rows(); ++i)
    if (rep_.get(i, j)) return false;
  return true;
}

bool BinaryMatroid::is_coloop(const std::string& e) const {
  std::size_t j = index_of(e);
  BitRow rest = (size() == 64 ? ~BitRow(0) : (BitRow(1) << size()) - 1) & ~(BitRow(1) << j);
  return subset_rank(ElementSet(rest, size())) == rank() - 1;
}

std::vector<std::vector<std::string>> BinaryMatroid::parallel_classes() const {
  std::map<BitRow, std::vector<std::string>> groups;
  for (std::size_t j = 0; j < size(); ++j) {
    BitRow col = 0;
    for (std::size_t i = 0; i < rep_.rows(); ++i)
      if (rep_.get(i, j)) col |= BitRow(1) << i;
    if (col) groups[col].push_back(labels_[j]);
  }
  std::vector<std::vector<std::string>> out;
  for (std::size_t j = 0; j < size(); ++j) {  // position order of representatives
    BitRow col = 0;
    for (std::size_t i = 0; i < rep_.rows(); ++i)
      if (rep_.get(i, j)) col |= BitRow(1) << i;
    if (!col) continue;
    auto it = groups.find(col);
    if (it != groups.end() && it->second.front() == labels_[j]) out.push_back(it->second);
  }
  return out;
}

ElementSet BinaryMatroid::set_of(const std::vector<std::string>& labels) const {
  BitRow b = 0;
  for (const auto& l : labels) b |= BitRow(1) << index_of(l);
  return ElementSet(b, size());
}

std::vector<std::string> BinaryMatroid::labels_of(const ElementSet& s) const {
  if (s.universe() != size())
    throw Error(ErrorKind::GroundSetMismatch, "set over a different ground set");
  std::vector<std::string> out;
  for (std::size_t i : s.members()) out.push_back(labels_[i]);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct IsoProblem {
  std::size_t n;
  std::vector<BitRow> cocsA, cocsB;
  std::unordered_set<BitRow> setB;
  std::vector<std::vector<int>> sigA, sigB;  // per element: sorted sizes of containing cocircuits
  std::vector<std::size_t> orderA;
  std::vector<int> match;   // A position -> B position or -1
  std::vector<bool> used;

  bool consistent(std::size_t depth) const {
    BitRow dom = 0, img = 0;
    for (std::size_t i = 0; i <= depth; ++i) dom |= BitRow(1) << orderA[i];
    for (std::size_t e = 0; e < n; ++e)
      if (match[e] >= 0) img |= BitRow(1) << match[e];
    std::size_t cntA = 0;
    for (BitRow c : cocsA) {
      if (c & ~dom) continue;
      ++cntA;
      BitRow m = 0;
      for (std::size_t e = 0; e < n; ++e)
        if ((c >> e) & 1) m |= BitRow(1) << match[e];
      if (!setB.count(m)) return false;
    }
    std::size_t cntB = 0;
    for (BitRow c : cocsB)
      if (!(c & ~img)) ++cntB;
    return cntA == cntB;
  }

  bool search(std::size_t depth) {
    if (depth == n) return true;
    std::size_t e = orderA[depth];
    for (std::size_t f = 0; f < n; ++f) {
      if (used[f] || sigA[e] != sigB[f]) continue;
      match[e] = static_cast<int>(f);
      used[f] = true;
      if (consistent(depth) && search(depth + 1)) return true;
      match[e] = -1;
      used[f] = false;
    }
    return false;
  }
};

std::vector<std::vector<int>> signatures(const std::vector<BitRow>& cocs, std::size_t n) {
  std::vector<std::vector<int>> sig(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (BitRow c : cocs)
      if ((c >> e) & 1) sig[e].push_back(popcount(c));
    std::sort(sig[e].begin(), sig[e].end());
  }
  return sig;
}

}  // namespace

std::optional<std::vector<std::pair<std::string, std::string>>> isomorphism(
    const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  IsoProblem p;
  p.n = a.size();
  for (const auto& c : a.cocircuits()) p.cocsA.push_back(c.bits());
  for (const auto& c : b.cocircuits()) p.cocsB.push_back(c.bits());
  if (p.cocsA.size() != p.cocsB.size()) return std::nullopt;
  auto sizes = [](const std::vector<BitRow>& cs) {
    std::vector<int> v;
    for (BitRow c : cs) v.push_back(popcount(c));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sizes(p.cocsA) != sizes(p.cocsB)) return std::nullopt;
  p.setB.insert(p.cocsB.begin(), p.cocsB.end());
  p.sigA = signatures(p.cocsA, p.n);
  p.sigB = signatures(p.cocsB, p.n);
  {
    auto sa = p.sigA, sb = p.sigB;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // rarest signature first
  std::vector<std::size_t> freq(p.n, 0);
  for (std::size_t e = 0; e < p.n; ++e)
    for (std::size_t f = 0; f < p.n; ++f)
      if (p.sigA[e] == p.sigA[f]) ++freq[e];
  p.orderA.resize(p.n);
  for (std::size_t i = 0; i < p.n; ++i) p.orderA[i] = i;
  std::sort(p.orderA.begin(), p.orderA.end(), [&](std::size_t x, std::size_t y) {
    if (freq[x] != freq[y]) return freq[x] < freq[y];
    return x < y;
  });
  p.match.assign(p.n, -1);
  p.used.assign(p.n, false);
  if (!p.search(0)) return std::nullopt;
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t e = 0; e < p.n; ++e)
    out.emplace_back(a.label(e), b.label(p.match[e]));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_text(const BinaryMatroid& m) {
  std::ostringstream os;
  os << "rank " << m.rank() << "\n";
  os << "elements";
  for (const auto& l : m.labels()) os << " " << l;
  os << "\n";
  for (std::size_t i = 0; i < m.rank(); ++i)
    os << "row " << m.representation().row_string(i) << "\n";
  return os.str();
}

BinaryMatroid matroid_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  std::size_t rank = 0;
  if (!(is >> word) || word != "rank" || !(is >> rank))
    throw Error(ErrorKind::Parse, "matroid file must start with 'rank <r>'");
  if (!(is >> word) || word != "elements")
    throw Error(ErrorKind::Parse, "expected 'elements' line");
  std::string rest;
  std::getline(is, rest);
  std::istringstream ls(rest);
  std::vector<std::string> labels;
  while (ls >> word) labels.push_back(word);
  if (labels.empty()) throw Error(ErrorKind::Parse, "no element labels");
  std::vector<std::string> rows;
  while (is >> word) {
    if (word != "row") throw Error(ErrorKind::Parse, "expected 'row' line");
    std::string bits;
    if (!(is >> bits) || bits.size() != labels.size())
      throw Error(ErrorKind::Parse, "row length must equal element count");
    rows.push_back(bits);
  }
  if (rows.size() != rank)
    throw Error(ErrorKind::Parse, "row count must equal declared rank");
  Gf2Matrix rep = rows.empty() ? Gf2Matrix(0, labels.size())  // all-loop matroid
                               : Gf2Matrix::from_strings(rows);
  BinaryMatroid m(rep, std::move(labels));
  if (m.rank() != rank)
    throw Error(ErrorKind::Parse, "rows do not have the declared rank");
  return m;
}

std::string render(const ElementSet& s, const BinaryMatroid& m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.members()) {
    if (!first) out += ",";
    out += m.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace cosys
