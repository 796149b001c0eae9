// Verification reports: an ordered list of named checks, each carrying the
// tag of the identity being tested and its worst residual.  Reports are
// rendered as fixed-layout text or as JSON with a stable field order, so the
// same input always produces the same bytes.

#ifndef QGV_REPORT_HPP
#define QGV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qgv {

inline constexpr const char* kToolVersion = "qgv 0.1.0";

struct Check {
  std::string id;
  std::string anchor;                // tag of the identity catalog entry
  std::optional<double> residual;    // empty for exact integer checks
  bool pass = false;
  bool informational = false;        // value-bearing entry, not a residual
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string input_digest)
      : input_digest_(std::move(input_digest)) {}

  /// Residual-based check: passes iff residual <= bound.
  void add(const std::string& id, const std::string& anchor, double residual,
           double bound);
  /// Exact check (integer identities, counts, structural facts).
  void add_exact(const std::string& id, const std::string& anchor, bool pass);
  /// Informational entry: never affects the overall verdict.
  void add_info(const std::string& id, const std::string& anchor,
                double value);

  void merge(const Report& other, const std::string& prefix = "");

  bool pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& input_digest() const { return input_digest_; }
  void set_input_digest(std::string d) { input_digest_ = std::move(d); }

  /// Largest residual among non-informational checks whose id starts with
  /// the given prefix.
  double max_residual(const std::string& id_prefix = "") const;

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::string input_digest_;
  std::vector<Check> checks_;
};

/// FNV-1a 64-bit content hash, rendered as "fnv1a:<16 hex digits>".
std::string content_digest(const std::string& bytes);

}  // namespace qgv

#endif
