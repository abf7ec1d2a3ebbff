#include "serialize.hpp"

#include <sstream>

namespace mmagic {

static Json decimals_of(const std::vector<std::int64_t>& units, int scale_exp) {
  Json arr = Json::array();
  for (std::int64_t u : units) arr.push_back(to_decimal_string(ScaledValue{u, scale_exp}));
  return arr;
}

Json labeling_to_json(const PathLabeling& labeling) {
  Json doc;
  doc["kind"] = "anti-fuzzy-path";
  doc["n"] = labeling.n;
  doc["scale_exp"] = labeling.scale_exp;
  doc["units"] = {{"sigma", labeling.sigma}, {"mu", labeling.mu}};
  doc["decimals"] = {{"sigma", decimals_of(labeling.sigma, labeling.scale_exp)},
                     {"mu", decimals_of(labeling.mu, labeling.scale_exp)}};
  return doc;
}

Json labeling_to_json(const BipolarPathLabeling& labeling) {
  Json doc;
  doc["kind"] = "bipolar-anti-fuzzy-path";
  doc["n"] = labeling.n;
  doc["scale_exp"] = labeling.scale_exp;
  doc["units"] = {{"sigma_p", labeling.sigma_p},
                  {"sigma_n", labeling.sigma_n},
                  {"mu_p", labeling.mu_p},
                  {"mu_n", labeling.mu_n}};
  doc["decimals"] = {{"sigma_p", decimals_of(labeling.sigma_p, labeling.scale_exp)},
                     {"sigma_n", decimals_of(labeling.sigma_n, labeling.scale_exp)},
                     {"mu_p", decimals_of(labeling.mu_p, labeling.scale_exp)},
                     {"mu_n", decimals_of(labeling.mu_n, labeling.scale_exp)}};
  return doc;
}

Json labeling_to_json(const Labeling& labeling) {
  return std::visit([](const auto& l) { return labeling_to_json(l); }, labeling);
}

static std::vector<std::int64_t> units_array(const Json& units, const char* key) {
  if (!units.contains(key) || !units.at(key).is_array()) {
    throw ParseError(std::string("labeling units block lacks array \"") + key + "\"");
  }
  std::vector<std::int64_t> out;
  for (const auto& item : units.at(key)) {
    if (!item.is_number_integer()) {
      throw ParseError(std::string("units.") + key + " holds a non-integer entry");
    }
    out.push_back(item.get<std::int64_t>());
  }
  return out;
}

Labeling labeling_from_json(const Json& doc) {
  const Json& node = doc.contains("labeling") ? doc.at("labeling") : doc;
  if (!node.is_object() || !node.contains("kind") || !node.contains("n") ||
      !node.contains("scale_exp") || !node.contains("units")) {
    throw ParseError("labeling document needs kind, n, scale_exp and units");
  }
  const std::string kind = node.at("kind").get<std::string>();
  const std::int64_t n = node.at("n").get<std::int64_t>();
  const int scale_exp = node.at("scale_exp").get<int>();
  const Json& units = node.at("units");
  try {
    if (kind == "anti-fuzzy-path") {
      return make_path_labeling(n, scale_exp, units_array(units, "sigma"),
                                units_array(units, "mu"));
    }
    if (kind == "bipolar-anti-fuzzy-path") {
      return make_bipolar_path_labeling(n, scale_exp, units_array(units, "sigma_p"),
                                        units_array(units, "sigma_n"), units_array(units, "mu_p"),
                                        units_array(units, "mu_n"));
    }
  } catch (const LabelRangeError& e) {
    throw ParseError(std::string("malformed labeling: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed labeling: ") + e.what());
  }
  throw ParseError("unknown labeling kind \"" + kind + "\"");
}

Labeling parse_labeling_text(std::string_view text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("input is not valid JSON");
  return labeling_from_json(doc);
}

Json report_to_json(const CheckReport& report) {
  Json doc;
  doc["passed"] = report.passed();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["condition"] = v.condition;
    item["index"] = v.index;
    Json observed = Json::array();
    Json observed_units = Json::array();
    for (const auto& value : v.observed) {
      observed.push_back(to_decimal_string(value));
      observed_units.push_back(value.units);
    }
    item["observed"] = std::move(observed);
    item["observed_units"] = std::move(observed_units);
    item["note"] = v.note;
    violations.push_back(std::move(item));
  }
  doc["violations"] = std::move(violations);
  return doc;
}

Json spectrum_to_json(const MagicSpectrum& spectrum, bool bipolar) {
  Json doc;
  Json constants = Json::array();
  Json constant_units = Json::array();
  for (const auto& value : spectrum.constants) {
    constants.push_back(to_decimal_string(value));
    constant_units.push_back(value.units);
  }
  doc["constants"] = std::move(constants);
  doc["constant_units"] = std::move(constant_units);
  if (bipolar) {
    Json negatives = Json::array();
    for (const auto& value : spectrum.constants) {
      negatives.push_back(to_decimal_string(negate(value)));
    }
    doc["negative_constants"] = std::move(negatives);
  }
  doc["assignment"] = spectrum.assignment;
  doc["block_sizes"] = spectrum.block_sizes;
  return doc;
}

Json admissibility_to_json(const AdmissibilityReport& report) {
  Json doc;
  doc["family"] = scale_family_name(report.family);
  doc["n"] = report.n;
  doc["m"] = report.m;
  doc["admissible"] = report.admissible;
  doc["case_tag"] = case_tag_name(report.case_tag);
  if (report.admissible) doc["a"] = report.a;
  doc["reason"] = report.reason;
  return doc;
}

std::string render_dot(const Labeling& labeling) {
  std::ostringstream out;
  out << "graph path {\n  rankdir=LR;\n  node [shape=circle];\n";
  if (const auto* path = std::get_if<PathLabeling>(&labeling)) {
    for (std::int64_t i = 1; i <= path->n; ++i) {
      out << "  v" << i << " [label=\"v" << i << " σ="
          << to_decimal_string(path->sigma_value(i)) << "\"];\n";
    }
    for (std::int64_t i = 1; i <= path->n - 1; ++i) {
      out << "  v" << i << " -- v" << i + 1 << " [label=\"μ="
          << to_decimal_string(path->mu_value(i)) << "\"];\n";
    }
  } else {
    const auto& bip = std::get<BipolarPathLabeling>(labeling);
    const auto dec = [&](const std::vector<std::int64_t>& v, std::int64_t i) {
      return to_decimal_string(ScaledValue{v[static_cast<std::size_t>(i - 1)], bip.scale_exp});
    };
    for (std::int64_t i = 1; i <= bip.n; ++i) {
      out << "  v" << i << " [label=\"v" << i << " σP=" << dec(bip.sigma_p, i)
          << "/σN=" << dec(bip.sigma_n, i) << "\"];\n";
    }
    for (std::int64_t i = 1; i <= bip.n - 1; ++i) {
      out << "  v" << i << " -- v" << i + 1 << " [label=\"μP=" << dec(bip.mu_p, i)
          << "/μN=" << dec(bip.mu_n, i) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace mmagic
