#include "nsgr/limits.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "nsgr/error.hpp"

namespace nsgr {
namespace {

std::int64_t parse_cap(const std::string& text) {
  try {
    std::size_t used = 0;
    // Accept 1e9 style values as well as plain integers.
    const long double v = std::stold(text, &used);
    if (used != text.size() || v <= 0) throw std::invalid_argument(text);
    return static_cast<std::int64_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "bad NSGR_CAP value '" + text + "'");
  }
}

}  // namespace

ResourceLimits ResourceLimits::from_environment() {
  ResourceLimits limits;
  const char* raw = std::getenv("NSGR_CAP");
  if (raw == nullptr || *raw == '\0') return limits;
  const std::string spec(raw);
  if (spec.find('=') == std::string::npos) {
    const auto v = parse_cap(spec);
    limits.monomials = limits.points = limits.residues = v;
    return limits;
  }
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidInput, "bad NSGR_CAP entry '" + item + "'");
    const std::string key = item.substr(0, eq);
    const auto v = parse_cap(item.substr(eq + 1));
    if (key == "monomials") limits.monomials = v;
    else if (key == "points") limits.points = v;
    else if (key == "residues") limits.residues = v;
    else throw Error(ErrorCode::InvalidInput, "unknown NSGR_CAP key '" + key + "'");
  }
  return limits;
}

const ResourceLimits& resource_limits() {
  static const ResourceLimits limits = ResourceLimits::from_environment();
  return limits;
}

}  // namespace nsgr
