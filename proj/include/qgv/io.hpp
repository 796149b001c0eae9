// File formats: algebras as sparse structure constants, groups as Cayley
// tables, fusion data as sparse coefficient lists.  All JSON; readers accept
// integers wherever reals are expected.

#ifndef QGV_IO_HPP
#define QGV_IO_HPP

#include <string>

#include "qgv/fusion.hpp"
#include "qgv/groups.hpp"
#include "qgv/hopf.hpp"

namespace qgv {

enum class FileKind { Algebra, Group, Fusion };

/// Reads a file into memory; throws input_error on IO failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

/// Identifies the payload by its top-level fields.
FileKind sniff_kind(const std::string& bytes);

FiniteHopfStarAlgebra parse_algebra(const std::string& bytes);
std::string serialize_algebra(const FiniteHopfStarAlgebra& h);

CayleyTable parse_group(const std::string& bytes);

FusionData parse_fusion(const std::string& bytes);
std::string serialize_fusion(const FusionData& fd);

}  // namespace qgv

#endif
