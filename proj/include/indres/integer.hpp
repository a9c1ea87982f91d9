#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace indres {

  // Every coefficient in the library is an arbitrary-precision integer.
  using Integer = boost::multiprecision::cpp_int;

  // Raised when an operation is applied outside its mathematical domain:
  // malformed tables, mismatched ambient structures, missing table entries.
  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  // Raised when an input file cannot be understood.
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  inline Integer abs(Integer const& x) {
    return x < 0 ? Integer(-x) : x;
  }

  inline std::string to_string(Integer const& x) {
    return x.str();
  }

  inline bool fits_int64(Integer const& x) {
    return x >= std::numeric_limits<std::int64_t>::min()
           && x <= std::numeric_limits<std::int64_t>::max();
  }

}  // namespace indres
