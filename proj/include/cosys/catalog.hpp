#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cosys/cosystole.hpp"
#include "cosys/graph.hpp"
#include "cosys/matroid.hpp"

namespace cosys {

struct CatalogEntry {
  std::string name;
  BinaryMatroid matroid;
  std::optional<Rational> expected_sys3;
  std::optional<int> expected_cogirth;
  std::vector<std::pair<std::string, WeightVector>> named_weights;
};

const std::vector<std::string>& catalog_names();
CatalogEntry catalog_get(const std::string& name);  // throws UnknownName

// The two reference matrices as 0/1 row strings (6 x 12 and 6 x 16);
// columns are labeled f0..f11 and 1..16 respectively.
const std::vector<std::string>& a12_rows();
const std::vector<std::string>& a16_rows();

// Frozen census graphs: "G1".."G9" on 10 vertices, "G53"/"G54" on 8.
Graph frozen_graph(const std::string& name);  // throws UnknownName

// Glue two matroids at a basepoint element (identified in the result).
BinaryMatroid parallel_connection(const BinaryMatroid& m, const BinaryMatroid& n,
                                  const std::string& p_m, const std::string& p_n);

// Glue two matroids across a common triangle (a 3-element circuit each).
BinaryMatroid generalized_parallel_connection_triangle(
    const BinaryMatroid& m, const BinaryMatroid& n,
    const std::array<std::string, 3>& t_m, const std::array<std::string, 3>& t_n);

}  // namespace cosys
