#pragma once

#include "labeling.hpp"

namespace mmagic {

/// Block offset c_k of the m-magic edge rule: c_1 = 1, c_2 = 4, c_k = 2k+2
/// for k >= 3 (so 1, 4, 8, 10, 12, ..., 2m+2).
std::int64_t offset_c(int k, int m);

/// Admissibility of a (n, m) instance: n >= 2m+1 and n = 1 (mod m), i.e.
/// n = 2m+1+ma. For the bipolar family the report also carries the case tag
/// (m even; m odd with n = 1 (mod 2m); m odd with n = m+1 (mod 2m)).
AdmissibilityReport admissible(std::int64_t n, int m, ScaleFamily family);

/// Block index of edge i under the equal partition of the n-1 edges into m
/// consecutive blocks of (n-1)/m: k = ceil(i*m / (n-1)).
int block_of_edge(std::int64_t i, std::int64_t n, int m);

/// One-constant path labeling: sigma(v_i) = i*d, mu(v_i v_{i+1}) = (3n-2i-1)*d,
/// every edge sum 3n*d. Requires n >= 3.
PathLabeling generate_magic(std::int64_t n, int scale_exp);

/// Two-constant path labeling for odd n >= 5. Edges 1..(n-1)/2 carry
/// (2n+1-2i)*d (sum (2n+2)*d), the rest carry (2n+6-2i)*d (sum (2n+7)*d).
/// The scheme stops satisfying the anti-fuzzy edge condition from n = 9 on;
/// the labeling is returned together with its condition report rather than
/// rejected, so the failure is observable output.
struct BimagicResult {
  PathLabeling labeling;
  CheckReport anti_fuzzy;
};
BimagicResult generate_bimagic(std::int64_t n, int scale_exp);

/// m-constant path labeling: sigma(v_i) = i*d and, for edge i in block k,
/// mu = (3n-2i+c_k)*d. Block k sums to (3n+c_k+1)*d. Requires admissibility.
/// m in {1, 2} is accepted as an extension of the block formulas and flagged.
struct MMagicResult {
  PathLabeling labeling;
  bool extension = false;
};
MMagicResult generate_m_magic(std::int64_t n, int m, int scale_exp);

/// Bipolar one-constant labeling for n >= 2: mirrored channels with
/// mu_p = (6n-4i-1)*d; positive sums 6n*d, negative sums -6n*d.
BipolarPathLabeling generate_bipolar_magic(std::int64_t n, int scale_exp);

/// Bipolar m-constant labeling: sigma_p(v_i) = (2i-1)*d for odd i, (2i)*d for
/// even i; edge i in block k carries mu_p = ((k+5)n-4i-k)*d; the negative
/// channel is the exact negation. Block k sums to ((k+5)n-(k-1))*d.
struct BipolarMMagicResult {
  BipolarPathLabeling labeling;
  bool extension = false;
};
BipolarMMagicResult generate_bipolar_m_magic(std::int64_t n, int m, int scale_exp);

}  // namespace mmagic
