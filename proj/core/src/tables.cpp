#include "lie_euler/tables.hpp"

namespace lie_euler {

namespace {

struct Entry {
  int i, j, k, c;  // [X_i, X_j] = c * X_k, 1-based, i < j
};

// Upper-triangle nonzero entries; the lower triangle follows by antisymmetry.
constexpr Entry kUpper[] = {
    {1, 9, 1, 1},   {1, 10, 2, -1}, {1, 12, 3, 1},
    {2, 9, 2, 1},   {2, 10, 1, 1},  {2, 11, 3, 1},
    {3, 9, 3, 1},   {3, 11, 2, -1}, {3, 12, 1, -1},
    {4, 5, 1, 1},   {4, 6, 2, 1},   {4, 7, 3, 1},   {4, 8, 4, 1},
    {5, 8, 5, -1},  {5, 9, 5, 1},   {5, 10, 6, -1}, {5, 12, 7, 1},
    {6, 8, 6, -1},  {6, 9, 6, 1},   {6, 10, 5, 1},  {6, 11, 7, 1},
    {7, 8, 7, -1},  {7, 9, 7, 1},   {7, 11, 6, -1}, {7, 12, 5, -1},
    {10, 11, 12, -1}, {10, 12, 11, 1},
    {11, 12, 10, -1},
};

StructureConstants build(int dim) {
  std::map<std::tuple<int, int, int>, Rational> c;
  for (const Entry& e : kUpper) {
    if (e.i > dim || e.j > dim || e.k > dim) continue;
    c[{e.i - 1, e.j - 1, e.k - 1}] = e.c;
    c[{e.j - 1, e.i - 1, e.k - 1}] = -e.c;
  }
  return StructureConstants(dim, std::move(c));
}

}  // namespace

const StructureConstants& reference_algebra_table() {
  static const StructureConstants sc = build(13);
  return sc;
}

const StructureConstants& reference_quotient_table() {
  static const StructureConstants sc = build(12);
  return sc;
}

}  // namespace lie_euler
