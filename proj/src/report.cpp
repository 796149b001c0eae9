#include "qgv/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace qgv {

void Report::add(const std::string& id, const std::string& anchor,
                 double residual, double bound) {
  checks_.push_back(Check{id, anchor, residual, residual <= bound, false});
}

void Report::add_exact(const std::string& id, const std::string& anchor,
                       bool pass) {
  checks_.push_back(Check{id, anchor, std::nullopt, pass, false});
}

void Report::add_info(const std::string& id, const std::string& anchor,
                      double value) {
  checks_.push_back(Check{id, anchor, value, true, true});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const Check& c : other.checks_) {
    Check copy = c;
    copy.id = prefix + c.id;
    checks_.push_back(std::move(copy));
  }
}

bool Report::pass() const {
  for (const Check& c : checks_)
    if (!c.pass) return false;
  return true;
}

double Report::max_residual(const std::string& id_prefix) const {
  double worst = 0.0;
  for (const Check& c : checks_) {
    if (c.informational || c.id.rfind(id_prefix, 0) != 0) continue;
    if (c.residual && *c.residual > worst) worst = *c.residual;
  }
  return worst;
}

namespace {

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << "tool: " << kToolVersion << "\n";
  out << "input: " << input_digest_ << "\n";
  for (const Check& c : checks_) {
    out << (c.informational ? "INFO  " : c.pass ? "PASS  " : "FAIL  ");
    out << c.id;
    for (std::size_t i = c.id.size(); i < 36; ++i) out << ' ';
    out << "[" << c.anchor << "]";
    if (c.residual)
      out << (c.informational ? "  value " : "  residual ")
          << format_residual(*c.residual);
    out << "\n";
  }
  out << "overall: " << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = kToolVersion;
  j["input"] = input_digest_;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks_) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    if (c.residual)
      e["residual"] = *c.residual;
    else
      e["residual"] = nullptr;
    e["pass"] = c.pass;
    j["checks"].push_back(std::move(e));
  }
  j["pass"] = pass();
  return j.dump(2) + "\n";
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qgv
