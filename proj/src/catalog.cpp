#include "cubemax/catalog.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "cubemax/constructions.hpp"
#include "cubemax/error.hpp"

namespace cubemax {

namespace {

using Rows = std::vector<std::vector<double>>;

Rows scaled(Rows rows, double factor) {
  for (auto& r : rows)
    for (auto& v : r) v *= factor;
  return rows;
}

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS7 = std::sqrt(7.0);
const double kS29 = std::sqrt(29.0);

struct Recipe {
  std::string name;
  std::function<TestMatrix()> build;
  std::string closed_form;
  double value;
  std::string citation;
};

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> table = [] {
    std::vector<Recipe> t;

    t.push_back({"n2", [] { return haar_matrix(1); }, "sqrt(2)", kS2,
                 "n=2 optimum: rotation by 45 degrees"});

    t.push_back({"n3_best",
                 [] {
                   const double a = 1.0 / kS3;
                   return TestMatrix::from_rows({{-a, a, -a}, {-kS2 / 2, 0.0, kS2 / 2}, {a, a, a}});
                 },
                 "(sqrt(2)+sqrt(3))/2", (kS2 + kS3) / 2, "n=3 best known, not orthogonal"});

    t.push_back({"n3_orthogonal",
                 [] {
                   const double r = 1.0 / kS2;
                   return TestMatrix::from_rows({{0.5, 0.5, r}, {-0.5, -0.5, r}, {r, -r, 0.0}});
                 },
                 "(2+3*sqrt(2))/4", (2 + 3 * kS2) / 4, "n=3 best known orthogonal"});

    t.push_back({"n4_A",
                 [] {
                   return TestMatrix::from_rows(scaled(
                       {{0, 1, -1, 1}, {1, -1, 0, 1}, {-1, -1, -1, 0}, {-1, 0, 1, 1}}, 1.0 / kS3));
                 },
                 "sqrt(3)", kS3, "n=4 best known, orthogonal, constant image norm"});

    t.push_back({"n4_B",
                 [] {
                   return TestMatrix::from_rows(scaled(
                       {{1, 1, 1, 0}, {1, -1, -1, 0}, {1, -1, 1, 0}, {1, 1, -1, 0}}, 1.0 / kS3));
                 },
                 "sqrt(3)", kS3, "n=4 alternate maximizer, ignores coordinate 4"});

    t.push_back({"n4_C", [] { return haar_matrix(2); }, "sqrt(3)", kS3,
                 "n=4 alternate maximizer, Haar construction"});

    t.push_back({"n5_A",
                 [] {
                   return TestMatrix::from_rows(scaled({{2, 2, 0, 0, 2},
                                                        {-2, 2, 0, 2, 0},
                                                        {-2, 0, 0, -2, 2},
                                                        {0, -kS3, kS3, kS3, kS3},
                                                        {0, kS3, kS3, -kS3, -kS3}},
                                                       1.0 / (2 * kS3)));
                 },
                 "(2+3*sqrt(3))/4", (2 + 3 * kS3) / 4, "n=5 best known"});

    t.push_back({"n5_B",
                 [] {
                   return TestMatrix::from_rows(scaled({{-kS3, -kS3, 0, kS3, -kS3},
                                                        {2, -2, 0, 0, 2},
                                                        {kS3, kS3, 0, -kS3, -kS3},
                                                        {-2, 0, 0, -2, 2},
                                                        {0, 2, 0, 2, 2}},
                                                       1.0 / (2 * kS3)));
                 },
                 "(2+3*sqrt(3))/4", (2 + 3 * kS3) / 4,
                 "n=5 alternate maximizer, ignores coordinate 3"});

    t.push_back({"n5_C",
                 [] {
                   const double a = 1.0 / kS3;
                   const double b = 1.0 / kS29;
                   const double h = 0.5;
                   return TestMatrix::from_rows({{a, 0, -a, a, 0},
                                                 {-b, -3 * b, -3 * b, -3 * b, -b},
                                                 {-a, 0, 0, a, -a},
                                                 {b, 3 * b, -b, -3 * b, -3 * b},
                                                 {h, -h, h, 0, -h}});
                 },
                 "(2+4*sqrt(3)+sqrt(29))/8", (2 + 4 * kS3 + kS29) / 8,
                 "n=5 recurring suboptimal attractor with sqrt(29) rows"});

    t.push_back({"n6_A",
                 [] {
                   return TestMatrix::from_rows(scaled({{-kS3, 0, kS3, -kS3, 0, -kS3},
                                                        {kS3, 0, -kS3, kS3, 0, -kS3},
                                                        {kS3, 0, kS3, kS3, 0, kS3},
                                                        {2, -2, 0, -2, 0, 0},
                                                        {-kS3, 0, -kS3, -kS3, 0, kS3},
                                                        {2, 2, 0, -2, 0, 0}},
                                                       1.0 / (2 * kS3)));
                 },
                 "(sqrt(3)+2)/2", (kS3 + 2) / 2, "n=6 best known"});

    t.push_back({"n6_B",
                 [] {
                   const double a = 1.0 / kS3;
                   const double b = 1.0 / kS29;
                   const double h = 0.5;
                   return TestMatrix::from_rows({{b, -3 * b, 0, 3 * b, b, -3 * b},
                                                 {h, 0, h, 0, h, h},
                                                 {3 * b, 3 * b, 0, b, -b, -3 * b},
                                                 {0, 0, 0, -a, a, -a},
                                                 {h, -h, 0, -h, -h, 0},
                                                 {-h, 0, h, 0, -h, -h}});
                 },
                 "(6+2*sqrt(3)+sqrt(29))/8", (6 + 2 * kS3 + kS29) / 8,
                 "n=6 recurring near-maximizer with sqrt(29) rows"});

    t.push_back({"n7_A",
                 [] {
                   const double w = 2.0 / kS3;
                   return TestMatrix::from_rows(scaled({{0, -1, 1, 0, -1, 0, -1},
                                                        {0, -1, -1, 0, 1, 0, 1},
                                                        {0, 0, 1, 0, 1, 1, -1},
                                                        {0, 0, -1, -1, -1, 1, 0},
                                                        {0, 0, 1, -1, 1, -1, 0},
                                                        {0, 0, w, 0, 0, w, w},
                                                        {0, 0, 1, 0, -1, -1, 1}},
                                                       0.5));
                 },
                 "(sqrt(3)+6)/4", (kS3 + 6) / 4, "n=7 best known, ignores coordinate 1"});

    t.push_back({"n8_haar", [] { return haar_matrix(3); }, "2", 2.0,
                 "n=8 best known: transposed Haar wavelet matrix"});

    t.push_back({"n8_hadamard",
                 [] {
                   return TestMatrix::from_rows(scaled({{1, 1, 1, 1, 1, 1, 1, 0},
                                                        {1, 1, 1, 0, -1, -1, -1, -1},
                                                        {1, 1, -1, 0, -1, -1, 1, 1},
                                                        {1, 1, -1, -1, 1, 1, -1, 0},
                                                        {1, -1, -1, 1, 1, -1, -1, 0},
                                                        {1, -1, -1, 0, -1, 1, 1, -1},
                                                        {1, -1, 1, 0, -1, 1, -1, 1},
                                                        {1, -1, 1, -1, 1, -1, 1, 0}},
                                                       1.0 / kS7));
                 },
                 "3*sqrt(7)/4", 3 * kS7 / 4, "n=8 near miss derived from the Hadamard matrix H_8"});
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : recipes()) out.push_back(r.name);
    return out;
  }();
  return names;
}

CatalogEntry catalog(std::string_view name) {
  for (const auto& r : recipes()) {
    if (r.name == name) return CatalogEntry{r.name, r.build(), r.closed_form, r.value, r.citation};
  }
  throw Error(ErrorKind::UnknownEntry, "no catalog entry named '" + std::string(name) + "'");
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& r : recipes()) out.push_back(catalog(r.name));
  return out;
}

std::string best_catalog_name(std::size_t n) {
  static const std::map<std::size_t, std::string> best = {
      {2, "n2"}, {3, "n3_best"}, {4, "n4_A"}, {5, "n5_A"}, {6, "n6_A"}, {7, "n7_A"}, {8, "n8_haar"}};
  const auto it = best.find(n);
  if (it == best.end()) {
    throw Error(ErrorKind::UnknownEntry, "no best-known entry for n = " + std::to_string(n));
  }
  return it->second;
}

}  // namespace cubemax
