#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cosys/gf2.hpp"

namespace cosys {

// Subset of the ground set of a specific matroid, as positions 0..|E|-1.
class ElementSet {
 public:
  ElementSet() : bits_(0), universe_(0) {}
  ElementSet(BitRow bits, std::size_t universe);
  static ElementSet of(std::initializer_list<std::size_t> members, std::size_t universe);

  BitRow bits() const { return bits_; }
  std::size_t universe() const { return universe_; }
  std::size_t count() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t i) const { return (bits_ >> i) & 1; }
  std::vector<std::size_t> members() const;
  bool subset_of(const ElementSet& o) const;

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b);
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b);
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  BitRow bits_;
  std::size_t universe_;
};

struct Simplification;

// Binary matroid given by a GF(2) representation; elements are columns.
// The representation is canonicalized to reduced row echelon form with zero
// rows dropped, so it always has full row rank and rank() == row count.
class BinaryMatroid {
 public:
  BinaryMatroid(const Gf2Matrix& rep, std::vector<std::string> labels,
                std::string name = "");

  BinaryMatroid(const BinaryMatroid& o);
  BinaryMatroid& operator=(const BinaryMatroid& o);

  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return rep_.rows(); }
  const Gf2Matrix& representation() const { return rep_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;  // throws UnknownElement
  const std::string& name() const { return name_; }

  // Inclusion-minimal supports of nonzero row-space vectors, sorted by
  // (cardinality, lexicographic on sorted member indices); cached.
  const std::vector<ElementSet>& cocircuits() const;
  std::vector<ElementSet> circuits() const;  // = cocircuits(dual())
  std::size_t subset_rank(const ElementSet& x) const;
  std::size_t cogirth() const;  // throws NoCocircuits when rank = 0

  BinaryMatroid deletion(const std::string& e) const;
  BinaryMatroid contraction(const std::string& e) const;
  BinaryMatroid dual() const;

  Simplification simplify() const;

  bool is_loop(const std::string& e) const;
  bool is_coloop(const std::string& e) const;
  std::vector<std::vector<std::string>> parallel_classes() const;

  ElementSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const ElementSet& s) const;

 private:
  Gf2Matrix rep_;
  std::vector<std::string> labels_;
  std::string name_;
  mutable std::mutex cache_mu_;
  mutable std::optional<std::vector<ElementSet>> cocircuits_;
};

struct Simplification {
  BinaryMatroid matroid;
  std::vector<std::pair<std::string, std::string>> kept;  // kept label -> source
};

// Ground-set bijection carrying cocircuits(a) onto cocircuits(b) exactly,
// or nullopt. Backtracking over element matchings, pruned by per-element
// cocircuit-size multisets and the global size spectrum.
std::optional<std::vector<std::pair<std::string, std::string>>> isomorphism(
    const BinaryMatroid& a, const BinaryMatroid& b);

// Text format: `rank <r>` / `elements <l1> ... <ln>` / r x `row <0/1 string>`.
std::string to_text(const BinaryMatroid& m);
BinaryMatroid matroid_from_text(const std::string& text);

// "{a,b,c}" with members in position order (label order for catalog data).
std::string render(const ElementSet& s, const BinaryMatroid& m);

}  // namespace cosys
