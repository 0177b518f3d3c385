#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace nonschur {

using Integer = boost::multiprecision::cpp_int;

// C(n, k); zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);
Integer ipow(const Integer& base, std::int64_t exp);

std::optional<std::int64_t> to_int64(const Integer& x);
std::string to_string(const Integer& x);

}  // namespace nonschur
