#pragma once

#include <stdexcept>
#include <string>

namespace slotgraph {

// Base error for everything the library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input document (bad JSON, bad binary container).
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid document violating the schema (missing field,
// unknown category, bad enum value).
struct SchemaError : Error {
  using Error::Error;
};

// A domain invariant does not hold (overlapping masks, dangling
// triplet endpoint, identity drift).
struct InvariantError : Error {
  using Error::Error;
};

// Array dimensions incompatible with an operation or parameter set.
struct ShapeError : Error {
  using Error::Error;
};

// Non-finite values where finite ones are required.
struct NumericError : Error {
  using Error::Error;
};

// Bad configuration (capacity exceeded, invalid field combination).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace slotgraph
