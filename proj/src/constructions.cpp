#include "constructions.hpp"

namespace mmagic {

std::int64_t offset_c(int k, int m) {
  if (m < 1) throw std::invalid_argument("offset_c: m must be >= 1");
  if (k < 1 || k > m) {
    throw std::out_of_range("offset_c: block index " + std::to_string(k) + " outside [1, " +
                            std::to_string(m) + "]");
  }
  if (k == 1) return 1;
  if (k == 2) return 4;
  return 2 * static_cast<std::int64_t>(k) + 2;
}

AdmissibilityReport admissible(std::int64_t n, int m, ScaleFamily family) {
  if (n < 2) throw std::invalid_argument("admissible: n must be >= 2");
  if (m < 1) throw std::invalid_argument("admissible: m must be >= 1");

  AdmissibilityReport report;
  report.family = family;
  report.n = n;
  report.m = m;

  if ((n - 1) % m != 0) {
    report.admissible = false;
    report.reason = "n ≢ 1 (mod m)";
    return report;
  }
  if (n < 2 * static_cast<std::int64_t>(m) + 1) {
    report.admissible = false;
    report.reason = "n < 2m+1";
    return report;
  }

  report.admissible = true;
  report.a = (n - (2 * static_cast<std::int64_t>(m) + 1)) / m;
  report.reason = "n = 2m+1+ma with a = " + std::to_string(report.a);
  if (family == ScaleFamily::bipolar) {
    if (m % 2 == 0) {
      report.case_tag = CaseTag::case1_m_even;
    } else if ((n - 1) % (2 * static_cast<std::int64_t>(m)) == 0) {
      report.case_tag = CaseTag::case1_m_odd;
    } else {
      // n = 1 (mod m) but not (mod 2m) forces n = m+1 (mod 2m); n >= 2m+1
      // rules out n = m+1 itself.
      report.case_tag = CaseTag::case2_m_odd;
    }
  }
  return report;
}

int block_of_edge(std::int64_t i, std::int64_t n, int m) {
  if (!admissible_pair(n, m)) {
    throw InadmissibleError("block_of_edge: (n, m) not admissible");
  }
  if (i < 1 || i > n - 1) {
    throw std::out_of_range("block_of_edge: edge index " + std::to_string(i) + " outside [1, " +
                            std::to_string(n - 1) + "]");
  }
  return static_cast<int>((i * m + (n - 2)) / (n - 1));  // ceil(i*m / (n-1))
}

static std::int64_t checked_positive_label(std::int64_t units, int scale_exp, const char* what,
                                           std::int64_t index) {
  if (units < 1 || units > pow10_int(scale_exp)) {
    throw LabelRangeError(std::string(what) + "[" + std::to_string(index) + "] = " +
                          std::to_string(units) + " units falls outside (0, 1] at scale_exp=" +
                          std::to_string(scale_exp) + "; the scale is too coarse for this instance");
  }
  return units;
}

PathLabeling generate_magic(std::int64_t n, int scale_exp) {
  if (n < 3) throw InadmissibleError("magic path labeling needs n >= 3");
  std::vector<std::int64_t> sigma, mu;
  sigma.reserve(static_cast<std::size_t>(n));
  mu.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t i = 1; i <= n; ++i) {
    sigma.push_back(checked_positive_label(i, scale_exp, "sigma", i));
  }
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    mu.push_back(checked_positive_label(3 * n - 2 * i - 1, scale_exp, "mu", i));
  }
  return make_path_labeling(n, scale_exp, std::move(sigma), std::move(mu));
}

BimagicResult generate_bimagic(std::int64_t n, int scale_exp) {
  if (n < 5 || n % 2 == 0) {
    throw InadmissibleError("bimagic path labeling needs odd n >= 5");
  }
  std::vector<std::int64_t> sigma, mu;
  for (std::int64_t i = 1; i <= n; ++i) {
    sigma.push_back(checked_positive_label(i, scale_exp, "sigma", i));
  }
  const std::int64_t half = (n - 1) / 2;
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    const std::int64_t units = i <= half ? 2 * n + 1 - 2 * i : 2 * n + 6 - 2 * i;
    mu.push_back(checked_positive_label(units, scale_exp, "mu", i));
  }
  BimagicResult result{make_path_labeling(n, scale_exp, std::move(sigma), std::move(mu)), {}};
  // The condition report is part of the contract: from n = 9 the late edges
  // drop below their endpoint labels and callers must see that.
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    const ScaledValue m_val = result.labeling.mu_value(i);
    const ScaledValue s_max = std::max(result.labeling.sigma_value(i), result.labeling.sigma_value(i + 1));
    if (compare(m_val, s_max) < 0) {
      result.anti_fuzzy.violations.push_back(
          {"anti-fuzzy-edge", i, {m_val, s_max}, "mu < max(sigma) at edge " + std::to_string(i)});
    }
  }
  return result;
}

MMagicResult generate_m_magic(std::int64_t n, int m, int scale_exp) {
  if (!admissible_pair(n, m)) {
    throw InadmissibleError("m-magic path labeling needs n >= 2m+1 with n ≡ 1 (mod m)");
  }
  std::vector<std::int64_t> sigma, mu;
  for (std::int64_t i = 1; i <= n; ++i) {
    sigma.push_back(checked_positive_label(i, scale_exp, "sigma", i));
  }
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    const int k = block_of_edge(i, n, m);
    mu.push_back(checked_positive_label(3 * n - 2 * i + offset_c(k, m), scale_exp, "mu", i));
  }
  return MMagicResult{make_path_labeling(n, scale_exp, std::move(sigma), std::move(mu)), m < 3};
}

// Vertex rule shared by the bipolar constructions: (2i-1)*d at odd i, (2i)*d
// at even i, with the negative channel mirrored.
static void bipolar_vertex_units(std::int64_t n, int scale_exp, std::vector<std::int64_t>& sigma_p,
                                 std::vector<std::int64_t>& sigma_n) {
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t units = i % 2 == 1 ? 2 * i - 1 : 2 * i;
    checked_positive_label(units, scale_exp, "sigma_p", i);
    sigma_p.push_back(units);
    sigma_n.push_back(-units);
  }
}

BipolarPathLabeling generate_bipolar_magic(std::int64_t n, int scale_exp) {
  if (n < 2) throw InadmissibleError("bipolar magic path labeling needs n >= 2");
  std::vector<std::int64_t> sigma_p, sigma_n, mu_p, mu_n;
  bipolar_vertex_units(n, scale_exp, sigma_p, sigma_n);
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    const std::int64_t units = checked_positive_label(6 * n - 4 * i - 1, scale_exp, "mu_p", i);
    mu_p.push_back(units);
    mu_n.push_back(-units);
  }
  return make_bipolar_path_labeling(n, scale_exp, std::move(sigma_p), std::move(sigma_n),
                                    std::move(mu_p), std::move(mu_n));
}

BipolarMMagicResult generate_bipolar_m_magic(std::int64_t n, int m, int scale_exp) {
  if (!admissible_pair(n, m)) {
    throw InadmissibleError("bipolar m-magic path labeling needs n >= 2m+1 with n ≡ 1 (mod m)");
  }
  std::vector<std::int64_t> sigma_p, sigma_n, mu_p, mu_n;
  bipolar_vertex_units(n, scale_exp, sigma_p, sigma_n);
  for (std::int64_t i = 1; i <= n - 1; ++i) {
    const std::int64_t k = block_of_edge(i, n, m);
    const std::int64_t units =
        checked_positive_label((k + 5) * n - 4 * i - k, scale_exp, "mu_p", i);
    mu_p.push_back(units);
    mu_n.push_back(-units);
  }
  return BipolarMMagicResult{make_bipolar_path_labeling(n, scale_exp, std::move(sigma_p),
                                                        std::move(sigma_n), std::move(mu_p),
                                                        std::move(mu_n)),
                             m < 3};
}

}  // namespace mmagic
