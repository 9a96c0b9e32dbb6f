#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 the reversed mixed-type operator== of boost::rational calls
// itself forever. These overloads win overload resolution, so comparing
// with an int literal fails to compile; compare with Rational(...).
namespace boost {
bool operator==(const rational<std::int64_t>&, int) = delete;
bool operator==(int, const rational<std::int64_t>&) = delete;
}  // namespace boost

namespace agree {
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws agree::Error.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace agree
