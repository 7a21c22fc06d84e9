#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cquant/core.hpp"

namespace cquant::cli {

/// Malformed user input; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One point per line, entries separated by commas and/or whitespace.
/// Blank lines and lines starting with '#' are skipped.
DataCloud read_points(std::istream& in, const std::string& source = "<stream>");
DataCloud read_points_file(const std::string& path);

struct ConeFile {
  Matrix generators;
  std::optional<Vector> interior;
};

/// Generator rows, one per line, plus an optional "interior: c1,c2,..." line.
ConeFile read_cone(std::istream& in, const std::string& source = "<stream>");
ConeFile read_cone_file(const std::string& path);

/// "1/2,1/2" or "0.5 0.5".
Vector parse_vector(std::string_view text);

}  // namespace cquant::cli
