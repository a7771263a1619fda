#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphdist/sphere_core.hpp"

namespace sphdist {

// Raised when a file cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seed file format: one seed per line. By default a line holds Cartesian
// "x y z" (normalized on load). A "# format: latlon" line switches the
// following lines to "lat lon" in degrees ("# format: xyz" switches back).
// Anything after '#' is a comment; blank lines are skipped.
// Malformed lines throw GeometryError(InvalidArgument) naming the line.
std::vector<UnitVector> parse_seeds(std::istream& in);
// Throws IoError when the file cannot be read.
std::vector<UnitVector> read_seed_file(const std::string& path);

}  // namespace sphdist
