#include "qgv/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qgv {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << bytes;
}

namespace {

json parse_json(const std::string& bytes) {
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw input_error("file is not valid JSON");
  return j;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw input_error(std::string("missing field '") + name + "'");
  return *it;
}

double number_at(const json& j, const char* context) {
  if (!j.is_number())
    throw input_error(std::string("field '") + context + "' must be a number");
  return j.get<double>();
}

Complex pair_at(const json& j, const char* context) {
  if (!j.is_array() || j.size() != 2)
    throw input_error(std::string("field '") + context +
                      "' must hold [re,im] pairs");
  return {number_at(j[0], context), number_at(j[1], context)};
}

Index index_at(const json& j, Index bound, const char* context) {
  if (!j.is_number_integer())
    throw input_error(std::string("field '") + context +
                      "' must hold integer indices");
  auto v = j.get<long long>();
  if (v < 0 || v >= bound)
    throw input_error(std::string("index out of range in field '") + context +
                      "'");
  return static_cast<Index>(v);
}

Matrix dense_matrix(const json& j, Index rows, Index cols, const char* name) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw input_error(std::string("field '") + name + "' must have " +
                      std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw input_error(std::string("field '") + name + "' row " +
                        std::to_string(r) + " must have " +
                        std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) m(r, c) = pair_at(row[c], name);
  }
  return m;
}

ordered dense_matrix_json(const Matrix& m) {
  ordered rows = ordered::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ordered row = ordered::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered pairs_json(const Vector& v) {
  ordered out = ordered::array();
  for (Index i = 0; i < v.size(); ++i)
    out.push_back({v(i).real(), v(i).imag()});
  return out;
}

}  // namespace

FileKind sniff_kind(const std::string& bytes) {
  json j = parse_json(bytes);
  if (!j.is_object()) throw input_error("expected a JSON object at top level");
  if (j.contains("dim") && j.contains("mult")) return FileKind::Algebra;
  if (j.contains("order") && j.contains("table")) return FileKind::Group;
  if (j.contains("size") && j.contains("N")) return FileKind::Fusion;
  throw input_error("cannot identify file: expected fields 'dim'/'mult', "
                    "'order'/'table', or 'size'/'N'");
}

FiniteHopfStarAlgebra parse_algebra(const std::string& bytes) {
  json j = parse_json(bytes);
  FiniteHopfStarAlgebra h;
  const json& jd = field(j, "dim");
  if (!jd.is_number_integer() || jd.get<long long>() <= 0)
    throw input_error("field 'dim' must be a positive integer");
  h.dim = jd.get<Index>();
  const Index n = h.dim;

  const json& names = field(j, "basis");
  if (!names.is_array() || static_cast<Index>(names.size()) != n)
    throw input_error("field 'basis' must list one name per basis element");
  for (const json& name : names) {
    if (!name.is_string())
      throw input_error("field 'basis' must hold strings");
    h.basis_names.push_back(name.get<std::string>());
  }

  h.lmul.assign(n, Matrix::Zero(n, n));
  for (const json& entry : field(j, "mult")) {
    if (!entry.is_array() || entry.size() != 5)
      throw input_error("field 'mult' must hold [i,j,k,re,im] entries");
    Index i = index_at(entry[0], n, "mult");
    Index jj = index_at(entry[1], n, "mult");
    Index k = index_at(entry[2], n, "mult");
    h.lmul[i](k, jj) += Complex(number_at(entry[3], "mult"),
                                number_at(entry[4], "mult"));
  }

  h.comult = Matrix::Zero(n * n, n);
  for (const json& entry : field(j, "comult")) {
    if (!entry.is_array() || entry.size() != 5)
      throw input_error("field 'comult' must hold [i,j,k,re,im] entries");
    Index i = index_at(entry[0], n, "comult");
    Index jj = index_at(entry[1], n, "comult");
    Index k = index_at(entry[2], n, "comult");
    h.comult(jj * n + k, i) += Complex(number_at(entry[3], "comult"),
                                       number_at(entry[4], "comult"));
  }

  const json& ju = field(j, "unit");
  if (!ju.is_array() || static_cast<Index>(ju.size()) != n)
    throw input_error("field 'unit' must hold one [re,im] pair per index");
  h.unit = Vector(n);
  for (Index i = 0; i < n; ++i) h.unit(i) = pair_at(ju[i], "unit");

  const json& je = field(j, "counit");
  if (!je.is_array() || static_cast<Index>(je.size()) != n)
    throw input_error("field 'counit' must hold one [re,im] pair per index");
  h.counit = RowVector(n);
  for (Index i = 0; i < n; ++i) h.counit(i) = pair_at(je[i], "counit");

  h.antipode = dense_matrix(field(j, "antipode"), n, n, "antipode");
  h.star = dense_matrix(field(j, "star"), n, n, "star");
  h.check_shapes();
  return h;
}

std::string serialize_algebra(const FiniteHopfStarAlgebra& h) {
  ordered j;
  j["dim"] = h.dim;
  j["basis"] = h.basis_names;
  ordered mult = ordered::array();
  for (Index i = 0; i < h.dim; ++i)
    for (Index jj = 0; jj < h.dim; ++jj)
      for (Index k = 0; k < h.dim; ++k) {
        Complex c = h.mult_coeff(i, jj, k);
        if (c != 0.0) mult.push_back({i, jj, k, c.real(), c.imag()});
      }
  j["mult"] = std::move(mult);
  ordered comult = ordered::array();
  for (Index i = 0; i < h.dim; ++i)
    for (Index jj = 0; jj < h.dim; ++jj)
      for (Index k = 0; k < h.dim; ++k) {
        Complex c = h.comult(jj * h.dim + k, i);
        if (c != 0.0) comult.push_back({i, jj, k, c.real(), c.imag()});
      }
  j["comult"] = std::move(comult);
  j["unit"] = pairs_json(h.unit);
  j["counit"] = pairs_json(h.counit.transpose());
  j["antipode"] = dense_matrix_json(h.antipode);
  j["star"] = dense_matrix_json(h.star);
  return j.dump(2) + "\n";
}

CayleyTable parse_group(const std::string& bytes) {
  json j = parse_json(bytes);
  const json& jo = field(j, "order");
  if (!jo.is_number_integer() || jo.get<long long>() <= 0)
    throw input_error("field 'order' must be a positive integer");
  int n = jo.get<int>();
  CayleyTable g;
  const json& jt = field(j, "table");
  if (!jt.is_array() || static_cast<int>(jt.size()) != n)
    throw input_error("field 'table' must have 'order' rows");
  for (const json& row : jt) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw input_error("field 'table' rows must have 'order' entries");
    std::vector<int> r;
    for (const json& e : row)
      r.push_back(static_cast<int>(index_at(e, n, "table")));
    g.table.push_back(std::move(r));
  }
  g.validate();
  return g;
}

FusionData parse_fusion(const std::string& bytes) {
  json j = parse_json(bytes);
  FusionData fd;
  const json& js = field(j, "size");
  if (!js.is_number_integer() || js.get<long long>() <= 0)
    throw input_error("field 'size' must be a positive integer");
  fd.size = js.get<int>();
  fd.unit = static_cast<int>(index_at(field(j, "unit"), fd.size, "unit"));
  const json& jb = field(j, "bar");
  if (!jb.is_array() || static_cast<int>(jb.size()) != fd.size)
    throw input_error("field 'bar' must list one index per class");
  for (const json& e : jb)
    fd.bar.push_back(static_cast<int>(index_at(e, fd.size, "bar")));
  fd.coeff.assign(fd.size, std::vector<std::vector<std::int64_t>>(
                               fd.size, std::vector<std::int64_t>(fd.size, 0)));
  for (const json& entry : field(j, "N")) {
    if (!entry.is_array() || entry.size() != 4)
      throw input_error("field 'N' must hold [i,j,k,count] entries");
    int i = static_cast<int>(index_at(entry[0], fd.size, "N"));
    int jj = static_cast<int>(index_at(entry[1], fd.size, "N"));
    int k = static_cast<int>(index_at(entry[2], fd.size, "N"));
    if (!entry[3].is_number_integer() || entry[3].get<long long>() < 0)
      throw input_error("field 'N' counts must be nonnegative integers");
    fd.coeff[i][jj][k] = entry[3].get<std::int64_t>();
  }
  return fd;
}

std::string serialize_fusion(const FusionData& fd) {
  ordered j;
  j["size"] = fd.size;
  j["unit"] = fd.unit;
  j["bar"] = fd.bar;
  ordered coeffs = ordered::array();
  for (int i = 0; i < fd.size; ++i)
    for (int jj = 0; jj < fd.size; ++jj)
      for (int k = 0; k < fd.size; ++k)
        if (fd.coeff[i][jj][k] != 0)
          coeffs.push_back({i, jj, k, fd.coeff[i][jj][k]});
  j["N"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

}  // namespace qgv
