#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubemax/matrix.hpp"

namespace cubemax {

/// A named candidate maximizer with the exact value of beta on it.
struct CatalogEntry {
  std::string name;
  TestMatrix matrix;
  std::string beta_closed_form;
  double beta_value;
  std::string citation;
};

/// Keys in presentation order: n2, n3_best, n3_orthogonal, n4_A, n4_B, n4_C,
/// n5_A, n5_B, n5_C, n6_A, n6_B, n7_A, n8_haar, n8_hadamard.
const std::vector<std::string>& catalog_names();

/// Throws UnknownEntry for an unrecognized key.
CatalogEntry catalog(std::string_view name);

std::vector<CatalogEntry> catalog_entries();

/// Key of the best known entry for n in [2, 8]; throws UnknownEntry otherwise.
std::string best_catalog_name(std::size_t n);

}  // namespace cubemax
