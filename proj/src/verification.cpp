#include "verification.hpp"

#include <algorithm>
#include <map>

#include "constructions.hpp"

namespace mmagic {

std::optional<SpectrumMode> spectrum_mode_from_name(std::string_view name) {
  if (name == "strict") return SpectrumMode::strict;
  if (name == "lax") return SpectrumMode::lax;
  return std::nullopt;
}

const char* spectrum_mode_name(SpectrumMode mode) {
  return mode == SpectrumMode::strict ? "strict" : "lax";
}

static void check_range(CheckReport& report, const std::vector<std::int64_t>& units, int scale_exp,
                        bool negative, const char* condition) {
  const std::int64_t base = pow10_int(scale_exp);
  for (std::size_t i = 0; i < units.size(); ++i) {
    const std::int64_t u = units[i];
    const bool ok = negative ? (u < 0 && u >= -base) : (u > 0 && u <= base);
    if (!ok) {
      report.violations.push_back({condition, static_cast<std::int64_t>(i + 1),
                                   {ScaledValue{u, scale_exp}},
                                   negative ? "label outside [-1, 0)" : "label outside (0, 1]"});
    }
  }
}

CheckReport check_anti_fuzzy(const PathLabeling& labeling) {
  CheckReport report;
  check_range(report, labeling.sigma, labeling.scale_exp, false, "sigma-range");
  check_range(report, labeling.mu, labeling.scale_exp, false, "mu-range");
  for (std::int64_t i = 1; i <= labeling.n - 1; ++i) {
    const ScaledValue mu = labeling.mu_value(i);
    const ScaledValue smax = std::max(labeling.sigma_value(i), labeling.sigma_value(i + 1));
    if (compare(mu, smax) < 0) {
      report.violations.push_back(
          {"anti-fuzzy-edge", i, {mu, smax}, "mu < max(sigma) at edge " + std::to_string(i)});
    }
  }
  return report;
}

CheckReport check_bipolar_anti_fuzzy(const BipolarPathLabeling& labeling, NegativeEdgeRule rule) {
  CheckReport report;
  check_range(report, labeling.sigma_p, labeling.scale_exp, false, "sigma-p-range");
  check_range(report, labeling.mu_p, labeling.scale_exp, false, "mu-p-range");
  check_range(report, labeling.sigma_n, labeling.scale_exp, true, "sigma-n-range");
  check_range(report, labeling.mu_n, labeling.scale_exp, true, "mu-n-range");
  const int p = labeling.scale_exp;
  const auto value = [&](const std::vector<std::int64_t>& v, std::int64_t i) {
    return ScaledValue{v[static_cast<std::size_t>(i - 1)], p};
  };
  for (std::int64_t i = 1; i <= labeling.n - 1; ++i) {
    const ScaledValue mu_p = value(labeling.mu_p, i);
    const ScaledValue smax = std::max(value(labeling.sigma_p, i), value(labeling.sigma_p, i + 1));
    if (compare(mu_p, smax) < 0) {
      report.violations.push_back(
          {"bipolar-positive-edge", i, {mu_p, smax}, "mu_p < max(sigma_p) at edge " + std::to_string(i)});
    }
    const ScaledValue mu_n = value(labeling.mu_n, i);
    if (rule == NegativeEdgeRule::mu_below_min) {
      const ScaledValue smin = std::min(value(labeling.sigma_n, i), value(labeling.sigma_n, i + 1));
      if (compare(mu_n, smin) > 0) {
        report.violations.push_back({"bipolar-negative-edge", i, {mu_n, smin},
                                     "mu_n > min(sigma_n) at edge " + std::to_string(i)});
      }
    } else {
      const ScaledValue nmax = std::max(value(labeling.sigma_n, i), value(labeling.sigma_n, i + 1));
      if (compare(mu_n, nmax) < 0) {
        report.violations.push_back({"bipolar-negative-edge", i, {mu_n, nmax},
                                     "mu_n < max(sigma_n) at edge " + std::to_string(i)});
      }
    }
  }
  return report;
}

// Shared spectrum machinery over a vector of per-edge sums (units).
static SpectrumResult spectrum_of_sums(const std::vector<std::int64_t>& sums, int scale_exp,
                                       SpectrumMode mode) {
  SpectrumResult result;
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t s : sums) ++counts[s];

  MagicSpectrum spectrum;
  std::map<std::int64_t, int> position;  // sum units -> 1-based constant index
  for (const auto& [units, count] : counts) {
    position[units] = static_cast<int>(spectrum.constants.size()) + 1;
    spectrum.constants.push_back(ScaledValue{units, scale_exp});
    spectrum.block_sizes.push_back(count);
  }
  for (std::int64_t s : sums) spectrum.assignment.push_back(position[s]);

  if (mode == SpectrumMode::strict) {
    const std::int64_t edges = static_cast<std::int64_t>(sums.size());
    const std::int64_t m_found = static_cast<std::int64_t>(spectrum.constants.size());
    if (edges % m_found != 0) {
      result.report.violations.push_back(
          {"strict-block-structure", 0, {},
           std::to_string(m_found) + " constants cannot split " + std::to_string(edges) +
               " edges into equal blocks"});
      return result;
    }
    const std::int64_t block = edges / m_found;
    for (std::int64_t c = 1; c <= m_found; ++c) {
      std::int64_t first = -1, last = -1, count = 0;
      for (std::int64_t i = 0; i < edges; ++i) {
        if (spectrum.assignment[static_cast<std::size_t>(i)] == c) {
          if (first < 0) first = i;
          last = i;
          ++count;
        }
      }
      if (count != block || last - first + 1 != count) {
        result.report.violations.push_back(
            {"strict-block-structure", c,
             {spectrum.constants[static_cast<std::size_t>(c - 1)]},
             "edges attaining this constant do not form one run of " + std::to_string(block)});
      }
    }
    if (!result.report.passed()) return result;
  }

  result.spectrum = std::move(spectrum);
  return result;
}

SpectrumResult extract_spectrum(const PathLabeling& labeling, SpectrumMode mode) {
  std::vector<std::int64_t> sums;
  sums.reserve(static_cast<std::size_t>(labeling.n - 1));
  for (std::int64_t i = 1; i <= labeling.n - 1; ++i) sums.push_back(edge_sum(labeling, i).units);
  return spectrum_of_sums(sums, labeling.scale_exp, mode);
}

SpectrumResult extract_spectrum(const BipolarPathLabeling& labeling, SpectrumMode mode) {
  SpectrumResult result;
  std::vector<std::int64_t> pos_sums;
  pos_sums.reserve(static_cast<std::size_t>(labeling.n - 1));
  for (std::int64_t i = 1; i <= labeling.n - 1; ++i) {
    const auto [pos, neg] = bipolar_edge_sums(labeling, i);
    if (neg.units != -pos.units) {
      result.report.violations.push_back({"bipolar-channel-mismatch", i, {pos, neg},
                                          "negative sum is not the negation of the positive sum"});
    }
    pos_sums.push_back(pos.units);
  }
  if (!result.report.passed()) return result;
  return spectrum_of_sums(pos_sums, labeling.scale_exp, mode);
}

template <typename L>
static CheckReport verify_impl(const L& labeling, int m, SpectrumMode mode) {
  CheckReport report;
  if (m < 1) throw std::invalid_argument("verify_m_magic: m must be >= 1");
  SpectrumResult sr = extract_spectrum(labeling, mode);
  report.append(std::move(sr.report));
  if (sr.spectrum && static_cast<int>(sr.spectrum->constants.size()) != m) {
    report.violations.push_back({"constant-count", 0, {},
                                 "found " + std::to_string(sr.spectrum->constants.size()) +
                                     " distinct constants, expected " + std::to_string(m)});
  }
  if constexpr (std::is_same_v<L, PathLabeling>) {
    report.append(check_anti_fuzzy(labeling));
  } else {
    report.append(check_bipolar_anti_fuzzy(labeling));
  }
  return report;
}

CheckReport verify_m_magic(const PathLabeling& labeling, int m, SpectrumMode mode) {
  return verify_impl(labeling, m, mode);
}

CheckReport verify_m_magic(const BipolarPathLabeling& labeling, int m, SpectrumMode mode) {
  return verify_impl(labeling, m, mode);
}

CheckReport verify_m_magic(const Labeling& labeling, int m, SpectrumMode mode) {
  return std::visit([&](const auto& l) { return verify_m_magic(l, m, mode); }, labeling);
}

std::vector<std::int64_t> expected_constant_units(Family family, std::int64_t n, int m) {
  switch (family) {
    case Family::magic:
      return {3 * n};
    case Family::bimagic:
      return {2 * n + 2, 2 * n + 7};
    case Family::m_magic: {
      std::vector<std::int64_t> units;
      for (int k = 1; k <= m; ++k) units.push_back(3 * n + offset_c(k, m) + 1);
      return units;
    }
    case Family::bipolar_magic:
      return {6 * n};
    case Family::bipolar_m_magic: {
      std::vector<std::int64_t> units;
      for (int k = 1; k <= m; ++k) units.push_back((k + 5) * n - (k - 1));
      return units;
    }
  }
  throw std::invalid_argument("expected_constant_units: unknown family");
}

template <typename L>
static CheckReport conformance_impl(const L& labeling, std::int64_t n, int m, Family family) {
  CheckReport report;
  if (labeling.n != n) {
    report.violations.push_back(
        {"conformance-shape", 0, {}, "labeling has n = " + std::to_string(labeling.n) +
                                         ", expected " + std::to_string(n)});
    return report;
  }
  SpectrumResult sr = extract_spectrum(labeling, SpectrumMode::lax);
  report.append(std::move(sr.report));
  if (!sr.spectrum) return report;

  const std::vector<std::int64_t> expected = expected_constant_units(family, n, m);
  const auto& actual = sr.spectrum->constants;
  if (actual.size() != expected.size()) {
    report.violations.push_back({"conformance-constant-count", 0, {},
                                 "found " + std::to_string(actual.size()) + " constants, expected " +
                                     std::to_string(expected.size())});
    return report;
  }
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (actual[k].units != expected[k]) {
      report.violations.push_back(
          {"conformance-constant", static_cast<std::int64_t>(k + 1),
           {actual[k], ScaledValue{expected[k], labeling.scale_exp}},
           "constant " + std::to_string(k + 1) + " differs from the closed form"});
    }
  }
  return report;
}

CheckReport conformance(const PathLabeling& labeling, std::int64_t n, int m, Family family) {
  if (is_bipolar(family)) throw std::invalid_argument("conformance: bipolar family for a plain labeling");
  return conformance_impl(labeling, n, m, family);
}

CheckReport conformance(const BipolarPathLabeling& labeling, std::int64_t n, int m, Family family) {
  if (!is_bipolar(family)) throw std::invalid_argument("conformance: plain family for a bipolar labeling");
  return conformance_impl(labeling, n, m, family);
}

CheckReport conformance(const Labeling& labeling, std::int64_t n, int m, Family family) {
  return std::visit([&](const auto& l) { return conformance(l, n, m, family); }, labeling);
}

}  // namespace mmagic
