// qgv: generate example Hopf *-algebras and run the verification suites.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 bad input.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qgv/io.hpp"
#include "qgv/report.hpp"
#include "qgv/runners.hpp"

namespace {

struct GlobalFlags {
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string format = "text";
};

int emit(const qgv::Report& rep, const GlobalFlags& flags) {
  if (flags.format == "json")
    std::cout << rep.to_json();
  else
    std::cout << rep.to_text();
  return rep.pass() ? 0 : 1;
}

qgv::FiniteHopfStarAlgebra load_algebra(const std::string& path,
                                        std::string* digest) {
  std::string bytes = qgv::read_file(path);
  *digest = qgv::content_digest(bytes);
  if (qgv::sniff_kind(bytes) != qgv::FileKind::Algebra)
    throw qgv::input_error(path + " does not hold an algebra");
  return qgv::parse_algebra(bytes);
}

qgv::CayleyTable load_group_arg(const std::string& arg) {
  if (arg == "Z2" || arg == "Z3" || arg == "Z4" || arg == "S3")
    return qgv::builtin_group(arg);
  std::string bytes = qgv::read_file(arg);
  if (qgv::sniff_kind(bytes) != qgv::FileKind::Group)
    throw qgv::input_error(arg + " does not hold a group table");
  return qgv::parse_group(bytes);
}

std::vector<std::int64_t> parse_dims(const std::string& arg) {
  std::vector<std::int64_t> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw qgv::input_error("--dims expects a comma-separated integer list");
    }
  }
  if (out.empty())
    throw qgv::input_error("--dims expects a comma-separated integer list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for finite-dimensional Hopf *-algebras"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--tol", flags.tol, "residual tolerance")
      ->capture_default_str();
  app.add_option("--seed", flags.seed,
                 "seed for the random central element in the block "
                 "decomposition")
      ->capture_default_str();
  app.add_option("--report", flags.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* example = app.add_subcommand("example", "generate an example algebra");
  std::string example_kind, example_group, example_out;
  example->add_option("kind", example_kind, "group-algebra or function-algebra")
      ->required()
      ->check(CLI::IsMember({"group-algebra", "function-algebra"}));
  example->add_option("group", example_group,
                      "built-in name (Z2, Z3, Z4, S3) or group file")
      ->required();
  example->add_option("--out", example_out, "output path")->required();

  std::string input_path;
  auto* verify = app.add_subcommand(
      "verify", "Hopf axioms, Haar functional, blocks, dual, transform");
  verify->add_option("file", input_path, "algebra file")->required();
  auto* monoid = app.add_subcommand(
      "monoid", "regular monoid, Frobenius property, absorption, intrinsic "
                "group");
  monoid->add_option("file", input_path, "algebra file")->required();
  auto* embed =
      app.add_subcommand("embed", "embedding functor verification");
  embed->add_option("file", input_path, "algebra file")->required();
  auto* tannaka =
      app.add_subcommand("tannaka", "reconstruction and round trip");
  tannaka->add_option("file", input_path, "algebra file")->required();
  auto* fusion = app.add_subcommand(
      "fusion", "fusion coefficients and dimension functions");
  std::string dims_arg;
  fusion->add_option("file", input_path, "algebra or fusion file")->required();
  fusion->add_option("--dims", dims_arg, "dimension function to verify");

  CLI11_PARSE(app, argc, argv);

  try {
    qgv::RunOptions opts;
    opts.tol = qgv::Tolerance(flags.tol);
    opts.seed = flags.seed;

    if (example->parsed()) {
      qgv::CayleyTable g = load_group_arg(example_group);
      qgv::FiniteHopfStarAlgebra h = example_kind == "group-algebra"
                                         ? qgv::group_algebra(g)
                                         : qgv::function_algebra(g);
      qgv::write_file(example_out, qgv::serialize_algebra(h));
      return 0;
    }

    std::string digest;
    if (verify->parsed()) {
      qgv::Report rep = qgv::run_verify(load_algebra(input_path, &digest), opts);
      rep.set_input_digest(digest);
      return emit(rep, flags);
    }
    if (monoid->parsed()) {
      qgv::Report rep = qgv::run_monoid(load_algebra(input_path, &digest), opts);
      rep.set_input_digest(digest);
      return emit(rep, flags);
    }
    if (embed->parsed()) {
      qgv::Report rep = qgv::run_embed(load_algebra(input_path, &digest), opts);
      rep.set_input_digest(digest);
      return emit(rep, flags);
    }
    if (tannaka->parsed()) {
      qgv::Report rep =
          qgv::run_tannaka(load_algebra(input_path, &digest), opts);
      rep.set_input_digest(digest);
      return emit(rep, flags);
    }
    if (fusion->parsed()) {
      std::optional<std::vector<std::int64_t>> dims;
      if (!dims_arg.empty()) dims = parse_dims(dims_arg);
      std::string bytes = qgv::read_file(input_path);
      qgv::Report rep;
      if (qgv::sniff_kind(bytes) == qgv::FileKind::Fusion)
        rep = qgv::run_fusion_data(qgv::parse_fusion(bytes), opts, dims);
      else
        rep = qgv::run_fusion(qgv::parse_algebra(bytes), opts, dims);
      rep.set_input_digest(qgv::content_digest(bytes));
      return emit(rep, flags);
    }
  } catch (const qgv::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const qgv::compute_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
