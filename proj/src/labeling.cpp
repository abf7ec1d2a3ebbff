#include "labeling.hpp"

namespace mmagic {

ScaledValue PathLabeling::sigma_value(std::int64_t i) const {
  if (i < 1 || i > n) throw std::out_of_range("vertex index out of range: " + std::to_string(i));
  return ScaledValue{sigma[static_cast<std::size_t>(i - 1)], scale_exp};
}

ScaledValue PathLabeling::mu_value(std::int64_t i) const {
  if (i < 1 || i > n - 1) throw std::out_of_range("edge index out of range: " + std::to_string(i));
  return ScaledValue{mu[static_cast<std::size_t>(i - 1)], scale_exp};
}

static void check_shape(std::int64_t n, int scale_exp, std::size_t sigma_len, std::size_t mu_len) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2 vertices");
  if (scale_exp < 1 || scale_exp > kMaxScaleExp) {
    throw std::invalid_argument("scale_exp must lie in [1, 18]");
  }
  if (sigma_len != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("sigma length " + std::to_string(sigma_len) + " != n");
  }
  if (mu_len != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("mu length " + std::to_string(mu_len) + " != n-1");
  }
}

static void check_units_range(const std::vector<std::int64_t>& units, int scale_exp, bool negative,
                              const char* name) {
  const std::int64_t base = pow10_int(scale_exp);
  for (std::size_t i = 0; i < units.size(); ++i) {
    const std::int64_t u = units[i];
    const bool ok = negative ? (u < 0 && u >= -base) : (u > 0 && u <= base);
    if (!ok) {
      throw LabelRangeError(std::string(name) + "[" + std::to_string(i + 1) + "] = " +
                            std::to_string(u) + " units is outside " +
                            (negative ? "[-1, 0)" : "(0, 1]") + " at scale_exp=" +
                            std::to_string(scale_exp));
    }
  }
}

PathLabeling make_path_labeling(std::int64_t n, int scale_exp, std::vector<std::int64_t> sigma,
                                std::vector<std::int64_t> mu) {
  check_shape(n, scale_exp, sigma.size(), mu.size());
  check_units_range(sigma, scale_exp, false, "sigma");
  check_units_range(mu, scale_exp, false, "mu");
  return PathLabeling{n, scale_exp, std::move(sigma), std::move(mu)};
}

BipolarPathLabeling make_bipolar_path_labeling(std::int64_t n, int scale_exp,
                                               std::vector<std::int64_t> sigma_p,
                                               std::vector<std::int64_t> sigma_n,
                                               std::vector<std::int64_t> mu_p,
                                               std::vector<std::int64_t> mu_n) {
  check_shape(n, scale_exp, sigma_p.size(), mu_p.size());
  if (sigma_n.size() != sigma_p.size() || mu_n.size() != mu_p.size()) {
    throw std::invalid_argument("negative channel lengths must match the positive channel");
  }
  check_units_range(sigma_p, scale_exp, false, "sigma_p");
  check_units_range(mu_p, scale_exp, false, "mu_p");
  check_units_range(sigma_n, scale_exp, true, "sigma_n");
  check_units_range(mu_n, scale_exp, true, "mu_n");
  return BipolarPathLabeling{n, scale_exp, std::move(sigma_p), std::move(sigma_n),
                             std::move(mu_p), std::move(mu_n)};
}

ScaledValue edge_sum(const PathLabeling& labeling, std::int64_t i) {
  return add(add(labeling.sigma_value(i), labeling.mu_value(i)), labeling.sigma_value(i + 1));
}

std::pair<ScaledValue, ScaledValue> bipolar_edge_sums(const BipolarPathLabeling& labeling,
                                                      std::int64_t i) {
  if (i < 1 || i > labeling.n - 1) {
    throw std::out_of_range("edge index out of range: " + std::to_string(i));
  }
  const auto at = [&](const std::vector<std::int64_t>& v, std::int64_t j) {
    return ScaledValue{v[static_cast<std::size_t>(j - 1)], labeling.scale_exp};
  };
  const ScaledValue pos = add(add(at(labeling.sigma_p, i), at(labeling.mu_p, i)), at(labeling.sigma_p, i + 1));
  const ScaledValue neg = add(add(at(labeling.sigma_n, i), at(labeling.mu_n, i)), at(labeling.sigma_n, i + 1));
  return {pos, neg};
}

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::case1_m_even: return "case1-m-even";
    case CaseTag::case1_m_odd: return "case1-m-odd";
    case CaseTag::case2_m_odd: return "case2-m-odd";
    case CaseTag::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

const char* family_name(Family family) {
  switch (family) {
    case Family::magic: return "magic";
    case Family::bimagic: return "bimagic";
    case Family::m_magic: return "m-magic";
    case Family::bipolar_magic: return "bipolar-magic";
    case Family::bipolar_m_magic: return "bipolar-m-magic";
  }
  return "m-magic";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "magic") return Family::magic;
  if (name == "bimagic") return Family::bimagic;
  if (name == "m-magic") return Family::m_magic;
  if (name == "bipolar-magic") return Family::bipolar_magic;
  if (name == "bipolar-m-magic") return Family::bipolar_m_magic;
  return std::nullopt;
}

ScaleFamily scale_family_of(Family family) {
  return is_bipolar(family) ? ScaleFamily::bipolar : ScaleFamily::anti_fuzzy;
}

bool is_bipolar(Family family) {
  return family == Family::bipolar_magic || family == Family::bipolar_m_magic;
}

}  // namespace mmagic
