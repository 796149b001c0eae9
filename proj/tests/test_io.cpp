#include <doctest.h>

#include "qgv/io.hpp"
#include "qgv/runners.hpp"

using namespace qgv;

namespace {

const RunOptions kOpts;

double algebra_distance(const FiniteHopfStarAlgebra& a,
                        const FiniteHopfStarAlgebra& b) {
  double d = 0.0;
  for (Index i = 0; i < a.dim; ++i)
    d = std::max(d, max_abs(Matrix(a.lmul[i] - b.lmul[i])));
  d = std::max(d, max_abs(Matrix(a.comult - b.comult)));
  d = std::max(d, max_abs(Vector(a.unit - b.unit)));
  d = std::max(d, max_abs(Matrix(Matrix(a.counit) - Matrix(b.counit))));
  d = std::max(d, max_abs(Matrix(a.antipode - b.antipode)));
  d = std::max(d, max_abs(Matrix(a.star - b.star)));
  return d;
}

}  // namespace

TEST_CASE("algebra serialization round trip is exact") {
  for (const char* name : {"Z2", "Z4", "S3"}) {
    for (bool fn : {false, true}) {
      FiniteHopfStarAlgebra h = fn ? function_algebra(builtin_group(name))
                                   : group_algebra(builtin_group(name));
      FiniteHopfStarAlgebra back = parse_algebra(serialize_algebra(h));
      CHECK(back.dim == h.dim);
      CHECK(back.basis_names == h.basis_names);
      CHECK(algebra_distance(h, back) == 0.0);
    }
  }
}

TEST_CASE("file kind detection") {
  FiniteHopfStarAlgebra h = group_algebra(cyclic_group(2));
  CHECK(sniff_kind(serialize_algebra(h)) == FileKind::Algebra);
  CHECK(sniff_kind("{\"order\": 2, \"table\": [[0,1],[1,0]]}") ==
        FileKind::Group);
  CHECK(sniff_kind("{\"size\": 1, \"unit\": 0, \"bar\": [0], \"N\": "
                   "[[0,0,0,1]]}") == FileKind::Fusion);
  CHECK_THROWS_AS(sniff_kind("{\"foo\": 1}"), input_error);
  CHECK_THROWS_AS(sniff_kind("not json"), input_error);
}

TEST_CASE("diagnostics name the offending field") {
  std::string msg;
  try {
    parse_algebra("{\"dim\": 2, \"basis\": [\"a\",\"b\"]}");
  } catch (const input_error& e) {
    msg = e.what();
  }
  CHECK(msg.find("mult") != std::string::npos);

  msg.clear();
  try {
    parse_group("{\"order\": 2, \"table\": [[0,1]]}");
  } catch (const input_error& e) {
    msg = e.what();
  }
  CHECK(msg.find("table") != std::string::npos);
}

TEST_CASE("integers are accepted where reals are expected") {
  // All-integer payload, as a hand-written file would contain.
  std::string bytes = R"({
    "dim": 1,
    "basis": ["e"],
    "mult": [[0,0,0,1,0]],
    "comult": [[0,0,0,1,0]],
    "unit": [[1,0]],
    "counit": [[1,0]],
    "antipode": [[[1,0]]],
    "star": [[[1,0]]]
  })";
  FiniteHopfStarAlgebra h = parse_algebra(bytes);
  CHECK(h.dim == 1);
  CHECK(verify_hopf_axioms(h, Tolerance()).pass());
}

TEST_CASE("group files parse and validate") {
  CayleyTable g = parse_group("{\"order\": 3, \"table\": "
                              "[[0,1,2],[1,2,0],[2,0,1]]}");
  CHECK(g.order() == 3);
  CHECK_THROWS_AS(
      parse_group("{\"order\": 2, \"table\": [[0,1],[1,1]]}"), input_error);
}

TEST_CASE("content digest is stable and content-sensitive") {
  CHECK(content_digest("abc") == content_digest("abc"));
  CHECK(content_digest("abc") != content_digest("abd"));
  CHECK(content_digest("").rfind("fnv1a:", 0) == 0);
}

TEST_CASE("reports are byte-identical across repeated runs") {
  FiniteHopfStarAlgebra h = function_algebra(builtin_group("S3"));
  Report a = run_verify(h, kOpts);
  Report b = run_verify(h, kOpts);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_text() == b.to_text());

  Report c = run_monoid(h, kOpts);
  Report d = run_monoid(h, kOpts);
  CHECK(c.to_json() == d.to_json());
}

TEST_CASE("report structure carries ids, anchors and residual kinds") {
  FiniteHopfStarAlgebra h = group_algebra(builtin_group("Z3"));
  Report rep = run_verify(h, kOpts);
  CHECK(rep.pass());
  for (const Check& c : rep.checks()) {
    CHECK(!c.id.empty());
    CHECK(!c.anchor.empty());
  }
  // JSON has the documented top-level shape.
  std::string json = rep.to_json();
  CHECK(json.find("\"tool\"") != std::string::npos);
  CHECK(json.find("\"input\"") != std::string::npos);
  CHECK(json.find("\"checks\"") != std::string::npos);
  CHECK(json.find("\"anchor\"") != std::string::npos);
  CHECK(json.find("\"pass\"") != std::string::npos);
}
