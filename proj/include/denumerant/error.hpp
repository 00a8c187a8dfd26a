#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace denumerant {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class EmptyCoinSet : public Error {
public:
  EmptyCoinSet() : Error("coin set is empty") {}
};

class NonPositiveDenomination : public Error {
public:
  NonPositiveDenomination(std::int64_t value, std::size_t index)
      : Error("denomination " + std::to_string(value) + " at index " +
              std::to_string(index) + " is not positive"),
        value_(value), index_(index) {}

  std::int64_t value() const noexcept { return value_; }
  std::size_t index() const noexcept { return index_; }

private:
  std::int64_t value_;
  std::size_t index_;
};

class NotCoprime : public Error {
public:
  explicit NotCoprime(std::uint64_t gcd)
      : Error("denominations share the common factor " + std::to_string(gcd)),
        gcd_(gcd) {}

  std::uint64_t gcd() const noexcept { return gcd_; }

private:
  std::uint64_t gcd_;
};

class DuplicateAbscissa : public Error {
public:
  explicit DuplicateAbscissa(std::string x)
      : Error("interpolation abscissa " + x + " appears more than once"),
        x_(std::move(x)) {}

  const std::string& abscissa() const noexcept { return x_; }

private:
  std::string x_;
};

/// Raised when a built value contradicts the oracle or the expected
/// structure. The closed form is exact, so this means a bug upstream.
class VerificationError : public Error {
public:
  using Error::Error;
};

class VerificationFailure : public VerificationError {
public:
  VerificationFailure(std::uint64_t n, std::string expected, std::string got)
      : VerificationError("quasi-polynomial disagrees with the oracle at n=" +
              std::to_string(n) + ": expected " + expected + ", got " + got),
        n_(n), expected_(std::move(expected)), got_(std::move(got)) {}

  std::uint64_t n() const noexcept { return n_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& got() const noexcept { return got_; }

private:
  std::uint64_t n_;
  std::string expected_;
  std::string got_;
};

class NonIntegerValue : public VerificationError {
public:
  NonIntegerValue(std::uint64_t n, std::string value)
      : VerificationError("quasi-polynomial evaluated to " + value + " at n=" +
              std::to_string(n) + ", not a nonnegative integer"),
        n_(n) {}

  std::uint64_t n() const noexcept { return n_; }

private:
  std::uint64_t n_;
};

class DecompositionMismatch : public VerificationError {
public:
  DecompositionMismatch(std::uint64_t residue, std::size_t power)
      : VerificationError("h_" + std::to_string(residue) + " differs from its shared part at x^" +
              std::to_string(power)),
        residue_(residue), power_(power) {}

  std::uint64_t residue() const noexcept { return residue_; }
  std::size_t power() const noexcept { return power_; }

private:
  std::uint64_t residue_;
  std::size_t power_;
};

class LeadingCoefficientMismatch : public VerificationError {
public:
  LeadingCoefficientMismatch(std::uint64_t residue, std::string found, std::string expected)
      : VerificationError("h_" + std::to_string(residue) + " has leading coefficient " + found +
              ", expected " + expected),
        residue_(residue), found_(std::move(found)) {}

  std::uint64_t residue() const noexcept { return residue_; }
  const std::string& found() const noexcept { return found_; }

private:
  std::uint64_t residue_;
  std::string found_;
};

class MissingGoldenFile : public Error {
public:
  explicit MissingGoldenFile(const std::string& path)
      : Error("golden file not found: " + path) {}
};

/// Malformed textual input (coin lists, rationals, LaTeX, JSON documents).
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace denumerant
