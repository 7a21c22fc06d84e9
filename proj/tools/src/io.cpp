#include "cquant_cli/io.hpp"

#include <cctype>
#include <fstream>

namespace cquant::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Vector parse_vector(std::string_view text) {
  Vector out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      out.push_back(Rational::parse(token));
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return out;
}

DataCloud read_points(std::istream& in, const std::string& source) {
  std::vector<Vector> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    Vector p;
    try {
      p = parse_vector(body);
    } catch (const InputError& e) {
      throw InputError(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!points.empty() && p.size() != points.front().size()) {
      throw InputError(source + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(points.front().size()) + " columns, got " +
                       std::to_string(p.size()));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw InputError(source + ": no data points");
  return DataCloud(std::move(points));
}

DataCloud read_points_file(const std::string& path) {
  auto in = open(path);
  return read_points(in, path);
}

ConeFile read_cone(std::istream& in, const std::string& source) {
  ConeFile cone;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    try {
      if (body.substr(0, 9) == "interior:") {
        if (cone.interior) throw InputError("duplicate interior line");
        cone.interior = parse_vector(body.substr(9));
        continue;
      }
      cone.generators.push_back(parse_vector(body));
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    if (cone.generators.back().size() != cone.generators.front().size()) {
      throw InputError(where + "ragged generator row");
    }
  }
  if (cone.generators.empty()) throw InputError(source + ": no cone generators");
  if (cone.interior && cone.interior->size() != cone.generators.front().size()) {
    throw InputError(source + ": interior point has the wrong dimension");
  }
  return cone;
}

ConeFile read_cone_file(const std::string& path) {
  auto in = open(path);
  return read_cone(in, path);
}

}  // namespace cquant::cli
