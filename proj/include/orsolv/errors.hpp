#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orsolv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed presentation or word text; position is a byte offset into the input
struct ParseError : Error {
  ParseError(std::size_t position, const std::string& message)
      : Error("at offset " + std::to_string(position) + ": " + message),
        position(position) {}
  std::size_t position;
};

struct UnknownGeneratorError : ParseError {
  UnknownGeneratorError(std::size_t position, std::string name)
      : ParseError(position, "unknown generator '" + name + "'"), name(std::move(name)) {}
  std::string name;
};

// a relator that freely reduces to the identity, where one is required
struct EmptyRelatorError : Error {
  EmptyRelatorError() : Error("relator reduces to the identity") {}
};

struct NotApplicableError : Error {
  explicit NotApplicableError(const std::string& message) : Error(message) {}
};

// elimination requested for a generator whose exponent sum is not zero
struct NonZeroExponentSumError : Error {
  NonZeroExponentSumError(const std::string& generator, long long sum)
      : Error("generator '" + generator + "' has exponent sum " + std::to_string(sum) +
              ", expected 0"),
        sum(sum) {}
  long long sum;
};

}  // namespace orsolv
