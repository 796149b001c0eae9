// Finite groups as 0-indexed Cayley tables with row 0 the identity.

#ifndef QGV_GROUPS_HPP
#define QGV_GROUPS_HPP

#include <string>
#include <vector>

#include "qgv/numeric.hpp"

namespace qgv {

struct CayleyTable {
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i g_j

  int order() const { return static_cast<int>(table.size()); }
  int mul(int i, int j) const { return table[i][j]; }
  int inverse(int i) const;

  /// Throws input_error unless the table is a group with identity at 0.
  void validate() const;
};

/// Built-in groups by name: Z2, Z3, Z4, S3.
CayleyTable builtin_group(const std::string& name);

CayleyTable cyclic_group(int n);
CayleyTable symmetric_group_s3();

}  // namespace qgv

#endif
