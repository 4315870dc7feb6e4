#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace badcycle {

using Rational = boost::rational<std::int64_t>;

// Parses "p", "p/q" or a terminating decimal such as "2.5".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

}  // namespace badcycle
