// SPDX-License-Identifier: Apache-2.0
//
// fdx -- spatial degrees-of-freedom regions for three-node full-duplex networks.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fdx {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exact 64-bit rational arithmetic exceeded the representable range.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// An interval endpoint lies outside the directional-cosine axis [-1, 1].
class OutOfRange : public Error {
  public:
    using Error::Error;
};

/// An interval pair has lo > hi.
class MalformedPair : public Error {
  public:
    using Error::Error;
};

/// Input text or JSON could not be interpreted; the message names the offending field.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// A scenario violates its invariants; the message lists the violations.
class InvalidScenario : public Error {
  public:
    using Error::Error;
};

/// A grid density leaves some block dimension non-integral.
class NonIntegralGrid : public Error {
  public:
    NonIntegralGrid(const std::string& message, std::int64_t suggested)
        : Error(message), suggested_density(suggested) {}

    /// Least density at which every block dimension becomes integral.
    std::int64_t suggested_density;
};

/// Singular values cluster at the rank threshold; the numerical rank is unreliable.
class IllConditioned : public Error {
  public:
    using Error::Error;
};

/// The two corner-point branches disagree at an indicator tie.
class AmbiguousCorner : public Error {
  public:
    using Error::Error;
};

} // namespace fdx
