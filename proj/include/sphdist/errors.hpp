#pragma once

#include <stdexcept>
#include <string>

namespace sphdist {

enum class ErrorKind {
  InvalidArgument,
  DegenerateAngle,
  DegenerateTriangle,
  UnsupportedTriangle,
  OutOfCase,
  NotConvex,
  SeedNotInterior,
  DegenerateSeeds,
};

const char* to_string(ErrorKind kind);

// Thrown for invalid geometry or out-of-domain arguments.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sphdist
