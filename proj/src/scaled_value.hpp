#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace mmagic {

/// Largest scale exponent such that 10^p still fits in int64.
inline constexpr int kMaxScaleExp = 18;

std::int64_t pow10_int(int p);

/// A membership degree stored as an integer count of d-steps, d = 10^-p.
/// Magic constants are compared for equality, so everything stays integral;
/// no floating point appears anywhere in the core.
struct ScaledValue {
  std::int64_t units = 0;
  int scale_exp = 2;

  friend std::strong_ordering operator<=>(const ScaledValue& a, const ScaledValue& b);
  friend bool operator==(const ScaledValue& a, const ScaledValue& b);
};

/// Validates 1 <= scale_exp <= kMaxScaleExp.
ScaledValue value_of(std::int64_t units, int scale_exp);

/// Exact sum. Rejects mixed scales; checks int64 overflow.
ScaledValue add(ScaledValue a, ScaledValue b);

ScaledValue negate(ScaledValue v);

/// Total order on equal-scale values. Mixed scales are rejected.
std::strong_ordering compare(ScaledValue a, ScaledValue b);

/// Renders with exactly scale_exp fraction digits: (26, 2) -> "0.26",
/// (-49, 2) -> "-0.49", (100, 2) -> "1.00".
std::string to_decimal_string(ScaledValue v);

/// Inverse of to_decimal_string; scale_exp is inferred from the fraction
/// digit count. Throws ParseError on anything else.
ScaledValue parse_decimal(std::string_view text);

/// 0 < value <= 1 at this scale.
bool is_positive_membership(ScaledValue v);
/// -1 <= value < 0 at this scale.
bool is_negative_membership(ScaledValue v);

enum class ScaleFamily { anti_fuzzy, bipolar };

const char* scale_family_name(ScaleFamily family);

/// True iff n >= 2m+1 and n == 1 (mod m), i.e. n = 2m+1+ma for some a >= 0.
bool admissible_pair(std::int64_t n, int m);

/// Scale exponent p for an admissible (n, m) instance.
///
/// anti-fuzzy: p=2 for n < 31, p=3 for n < 331, then p=j+4 on
///             331*10^j <= n < 331*10^(j+1).
/// bipolar:    p=2 for n < 11, p=3 for n < 35, p=4 for n < 334, then
///             p=j+4 on 334*10^j <= n < 334*10^(j+1).
///
/// Throws InadmissibleError when (n, m) is not admissible.
int select_scale(std::int64_t n, int m, ScaleFamily family);

}  // namespace mmagic
