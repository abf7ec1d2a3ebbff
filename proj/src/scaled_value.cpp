#include "scaled_value.hpp"

#include <limits>

namespace mmagic {

std::int64_t pow10_int(int p) {
  if (p < 0 || p > kMaxScaleExp) {
    throw std::invalid_argument("pow10_int: exponent out of range [0, 18]: " + std::to_string(p));
  }
  std::int64_t r = 1;
  for (int i = 0; i < p; ++i) r *= 10;
  return r;
}

static void require_same_scale(ScaledValue a, ScaledValue b, const char* op) {
  if (a.scale_exp != b.scale_exp) {
    throw ScaleMismatchError(std::string(op) + ": mixed scale exponents " +
                             std::to_string(a.scale_exp) + " and " + std::to_string(b.scale_exp));
  }
}

std::strong_ordering operator<=>(const ScaledValue& a, const ScaledValue& b) {
  return compare(a, b);
}

bool operator==(const ScaledValue& a, const ScaledValue& b) {
  return compare(a, b) == std::strong_ordering::equal;
}

ScaledValue value_of(std::int64_t units, int scale_exp) {
  if (scale_exp < 1 || scale_exp > kMaxScaleExp) {
    throw std::invalid_argument("scale_exp must lie in [1, 18], got " + std::to_string(scale_exp));
  }
  return ScaledValue{units, scale_exp};
}

ScaledValue add(ScaledValue a, ScaledValue b) {
  require_same_scale(a, b, "add");
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.units, b.units, &sum)) {
    throw std::overflow_error("add: unit overflow");
  }
  return ScaledValue{sum, a.scale_exp};
}

ScaledValue negate(ScaledValue v) {
  if (v.units == std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("negate: unit overflow");
  }
  return ScaledValue{-v.units, v.scale_exp};
}

std::strong_ordering compare(ScaledValue a, ScaledValue b) {
  require_same_scale(a, b, "compare");
  return a.units <=> b.units;
}

std::string to_decimal_string(ScaledValue v) {
  const std::int64_t base = pow10_int(v.scale_exp);
  const bool neg = v.units < 0;
  // magnitude via uint64 so INT64_MIN cannot trip -units
  const std::uint64_t mag =
      neg ? ~static_cast<std::uint64_t>(v.units) + 1u : static_cast<std::uint64_t>(v.units);
  const std::uint64_t ubase = static_cast<std::uint64_t>(base);
  std::string frac = std::to_string(mag % ubase);
  frac.insert(0, static_cast<std::size_t>(v.scale_exp) - frac.size(), '0');
  return (neg ? "-" : "") + std::to_string(mag / ubase) + "." + frac;
}

ScaledValue parse_decimal(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> ScaledValue {
    throw ParseError("not a scaled decimal: \"" + std::string(original) + "\"");
  };

  bool neg = false;
  if (!text.empty() && text.front() == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == text.size()) fail();
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.size() > static_cast<std::size_t>(kMaxScaleExp)) fail();
  for (char c : int_part)
    if (c < '0' || c > '9') fail();
  for (char c : frac_part)
    if (c < '0' || c > '9') fail();

  const int p = static_cast<int>(frac_part.size());
  const std::int64_t base = pow10_int(p);
  std::int64_t ip = 0, fp = 0;
  for (char c : int_part) {
    if (ip > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10) fail();
    ip = ip * 10 + (c - '0');
  }
  for (char c : frac_part) fp = fp * 10 + (c - '0');
  if (ip > (std::numeric_limits<std::int64_t>::max() - fp) / base) fail();
  std::int64_t units = ip * base + fp;
  if (neg) units = -units;
  return value_of(units, p);
}

bool is_positive_membership(ScaledValue v) {
  return v.units > 0 && v.units <= pow10_int(v.scale_exp);
}

bool is_negative_membership(ScaledValue v) {
  return v.units < 0 && v.units >= -pow10_int(v.scale_exp);
}

const char* scale_family_name(ScaleFamily family) {
  return family == ScaleFamily::anti_fuzzy ? "anti-fuzzy" : "bipolar";
}

bool admissible_pair(std::int64_t n, int m) {
  if (m < 1 || n < 2) return false;
  return n >= 2 * static_cast<std::int64_t>(m) + 1 && (n - 1) % m == 0;
}

// j >= 0 with threshold*10^j <= n < threshold*10^(j+1); returns j+4.
static int band_exponent(std::int64_t n, std::int64_t threshold) {
  int j = 0;
  while (threshold <= std::numeric_limits<std::int64_t>::max() / 10 && n >= threshold * 10) {
    threshold *= 10;
    ++j;
  }
  const int p = j + 4;
  if (p > kMaxScaleExp) {
    throw std::domain_error("select_scale: scale exponent " + std::to_string(p) +
                            " exceeds the representable range");
  }
  return p;
}

int select_scale(std::int64_t n, int m, ScaleFamily family) {
  if (m < 1) throw std::invalid_argument("select_scale: m must be >= 1");
  if (n < 2 || (n - 1) % m != 0) {
    throw InadmissibleError("select_scale: n ≢ 1 (mod m)");
  }
  if (n < 2 * static_cast<std::int64_t>(m) + 1) {
    throw InadmissibleError("select_scale: n < 2m+1");
  }
  if (family == ScaleFamily::anti_fuzzy) {
    if (n < 31) return 2;
    if (n < 331) return 3;
    return band_exponent(n, 331);
  }
  if (n < 11) return 2;
  if (n < 35) return 3;
  if (n < 334) return 4;
  return band_exponent(n, 334);
}

}  // namespace mmagic
