#include "qgv/groups.hpp"

#include <array>

namespace qgv {

int CayleyTable::inverse(int i) const {
  for (int j = 0; j < order(); ++j)
    if (table[i][j] == 0) return j;
  throw input_error("group table: element " + std::to_string(i) +
                    " has no inverse");
}

void CayleyTable::validate() const {
  const int n = order();
  if (n == 0) throw input_error("group table: empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw input_error("group table: row " + std::to_string(i) +
                        " has wrong length");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw input_error("group table: entry out of range at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
  }
  for (int j = 0; j < n; ++j) {
    if (table[0][j] != j || table[j][0] != j)
      throw input_error("group table: row 0 is not the identity element");
  }
  // Cancellation: rows and columns are permutations.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[table[i][j]] || col[table[j][i]])
        throw input_error("group table: row or column " + std::to_string(i) +
                          " is not a permutation");
      row[table[i][j]] = true;
      col[table[j][i]] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw input_error("group table: not associative at (" +
                            std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")");
  }
  for (int i = 0; i < n; ++i) inverse(i);
}

CayleyTable cyclic_group(int n) {
  if (n <= 0) throw input_error("cyclic group order must be positive");
  CayleyTable g;
  g.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

CayleyTable symmetric_group_s3() {
  // Permutations of {0,1,2} in lexicographic one-line order; index 0 is the
  // identity, indices 1,2,5 the transpositions, 3,4 the 3-cycles.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw compute_error("S3 composition escaped the permutation list");
  };
  CayleyTable g;
  g.table.assign(6, std::vector<int>(6, 0));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      g.table[i][j] = index_of(c);
    }
  }
  return g;
}

CayleyTable builtin_group(const std::string& name) {
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "S3") return symmetric_group_s3();
  throw input_error("unknown built-in group '" + name +
                    "' (expected Z2, Z3, Z4 or S3)");
}

}  // namespace qgv
