#include "nonschur/errors.hpp"
#include "nonschur/integer.hpp"

#include <limits>
#include <sstream>

namespace nonschur {

namespace {
std::string join_failures(const std::vector<std::string>& f) {
  std::ostringstream os;
  os << "validation failed";
  for (const auto& s : f) os << "; " << s;
  return os.str();
}
}  // namespace

ValidationError::ValidationError(std::vector<std::string> failures)
    : std::runtime_error(join_failures(failures)), failures_(std::move(failures)) {}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer factorial(std::int64_t n) {
  Integer r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer ipow(const Integer& base, std::int64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return x.convert_to<std::int64_t>();
}

std::string to_string(const Integer& x) { return x.str(); }

}  // namespace nonschur
