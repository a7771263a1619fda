#include "sphdist/seed_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sphdist/errors.hpp"

namespace sphdist {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& why) {
  throw GeometryError(ErrorKind::InvalidArgument,
                      "seed file line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

std::vector<UnitVector> parse_seeds(std::istream& in) {
  std::vector<UnitVector> seeds;
  bool latlon = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = trim(line.substr(hash + 1));
      if (comment.rfind("format:", 0) == 0) {
        const std::string fmt = trim(comment.substr(7));
        if (fmt == "latlon") {
          latlon = true;
        } else if (fmt == "xyz") {
          latlon = false;
        } else {
          bad_line(lineno, "unknown format '" + fmt + "'");
        }
      }
      line.resize(hash);
    }
    if (trim(line).empty()) continue;

    std::istringstream fields(line);
    std::vector<double> v;
    double x;
    while (fields >> x) v.push_back(x);
    if (!fields.eof()) bad_line(lineno, "not a number");
    const std::size_t want = latlon ? 2 : 3;
    if (v.size() != want) {
      bad_line(lineno, "expected " + std::to_string(want) + " values, got " + std::to_string(v.size()));
    }
    if (latlon && !(std::abs(v[0]) <= 90.0)) bad_line(lineno, "latitude outside [-90, 90]");
    try {
      seeds.push_back(latlon ? UnitVector::from_lat_lon_degrees(v[0], v[1])
                             : UnitVector(v[0], v[1], v[2]));
    } catch (const GeometryError& e) {
      bad_line(lineno, e.what());
    }
  }
  if (in.bad()) throw IoError("error while reading seed data");
  return seeds;
}

std::vector<UnitVector> read_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open seed file '" + path + "'");
  return parse_seeds(in);
}

}  // namespace sphdist
