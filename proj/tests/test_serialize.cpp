#include <doctest.h>

#include <random>
#include <regex>

#include "constructions.hpp"
#include "document.hpp"
#include "oracle.hpp"
#include "serialize.hpp"

using namespace mmagic;

namespace {

PathLabeling reference_path5() { return make_path_labeling(5, 2, {1, 2, 3, 4, 5}, {12, 10, 8, 6}); }

Labeling random_labeling(std::mt19937_64& rng) {
  const int p = 1 + static_cast<int>(rng() % 3);
  const std::int64_t base = pow10_int(p);
  const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);
  const auto unit = [&]() {
    return 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(base));
  };
  std::vector<std::int64_t> sigma, mu;
  for (std::int64_t i = 0; i < n; ++i) sigma.push_back(unit());
  for (std::int64_t i = 0; i + 1 < n; ++i) mu.push_back(unit());
  if (rng() % 2 == 0) return make_path_labeling(n, p, sigma, mu);
  std::vector<std::int64_t> sigma_n(sigma.size()), mu_n(mu.size());
  for (auto& u : sigma_n) u = -unit();
  for (auto& u : mu_n) u = -unit();
  return make_bipolar_path_labeling(n, p, sigma, sigma_n, mu, mu_n);
}

}  // namespace

TEST_CASE("labeling JSON golden content") {
  const Json doc = labeling_to_json(reference_path5());
  CHECK(doc.at("kind") == "anti-fuzzy-path");
  CHECK(doc.at("n") == 5);
  CHECK(doc.at("scale_exp") == 2);
  CHECK(doc.at("units").at("sigma") == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  CHECK(doc.at("units").at("mu") == std::vector<std::int64_t>{12, 10, 8, 6});
  CHECK(doc.at("decimals").at("mu") ==
        std::vector<std::string>{"0.12", "0.10", "0.08", "0.06"});
}

TEST_CASE("JSON round trip is exact on random labelings") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Labeling original = random_labeling(rng);
    const Labeling back = parse_labeling_text(labeling_to_json(original).dump());
    CHECK(back == original);
  }
}

TEST_CASE("parser accepts documents that wrap the labeling") {
  Json wrapped;
  wrapped["labeling"] = labeling_to_json(reference_path5());
  wrapped["extra"] = 1;
  const Labeling parsed = labeling_from_json(wrapped);
  CHECK(std::get<PathLabeling>(parsed) == reference_path5());
}

TEST_CASE("parser failure modes") {
  CHECK_THROWS_AS(parse_labeling_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_labeling_text("{}"), ParseError);
  CHECK_THROWS_AS(parse_labeling_text(
                      R"({"kind":"ring","n":3,"scale_exp":2,"units":{"sigma":[1,1,1],"mu":[1,1]}})"),
                  ParseError);
  // mu length mismatch
  CHECK_THROWS_AS(parse_labeling_text(
                      R"({"kind":"anti-fuzzy-path","n":3,"scale_exp":2,"units":{"sigma":[1,1,1],"mu":[1]}})"),
                  ParseError);
  // non-integer units are not representable labels
  CHECK_THROWS_AS(parse_labeling_text(
                      R"({"kind":"anti-fuzzy-path","n":3,"scale_exp":2,"units":{"sigma":[1,0.5,1],"mu":[1,1]}})"),
                  ParseError);
  // out-of-range label: the file is malformed, not a generator scale problem
  CHECK_THROWS_AS(parse_labeling_text(
                      R"({"kind":"anti-fuzzy-path","n":3,"scale_exp":2,"units":{"sigma":[1,101,1],"mu":[1,1]}})"),
                  ParseError);
}

TEST_CASE("DOT rendering of the one-constant example") {
  const std::string dot = render_dot(Labeling{reference_path5()});
  for (int i = 1; i <= 5; ++i) {
    CHECK(dot.find("v" + std::to_string(i) + " [label=\"v" + std::to_string(i)) !=
          std::string::npos);
  }
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("μ=0.12") != std::string::npos);
  CHECK(dot.find("μ=0.10") != std::string::npos);
  CHECK(dot.find("μ=0.08") != std::string::npos);
  CHECK(dot.find("μ=0.06") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("--"); at != std::string::npos; at = dot.find("--", at + 2)) {
    ++edges;
  }
  CHECK(edges == 4);
}

TEST_CASE("DOT rendering shows both bipolar channels") {
  const std::string dot = render_dot(Labeling{generate_bipolar_m_magic(9, 4, 2).labeling});
  CHECK(dot.find("σP=0.01/σN=-0.01") != std::string::npos);
  CHECK(dot.find("μP=0.49/μN=-0.49") != std::string::npos);
}

TEST_CASE("report and spectrum serialization") {
  const CheckReport report = check_anti_fuzzy(make_path_labeling(2, 2, {50, 50}, {40}));
  const Json doc = report_to_json(report);
  CHECK(doc.at("passed") == false);
  CHECK(doc.at("violations").at(0).at("condition") == "anti-fuzzy-edge");
  CHECK(doc.at("violations").at(0).at("observed") == std::vector<std::string>{"0.40", "0.50"});
  CHECK(doc.at("violations").at(0).at("observed_units") == std::vector<std::int64_t>{40, 50});

  const SpectrumResult s = extract_spectrum(generate_m_magic(9, 4, 2).labeling, SpectrumMode::strict);
  const Json sjson = spectrum_to_json(*s.spectrum, false);
  CHECK(sjson.at("constants") == std::vector<std::string>{"0.29", "0.32", "0.36", "0.38"});
  CHECK(sjson.at("constant_units") == std::vector<std::int64_t>{29, 32, 36, 38});
  CHECK(sjson.at("block_sizes") == std::vector<std::int64_t>{2, 2, 2, 2});

  const SpectrumResult b =
      extract_spectrum(generate_bipolar_m_magic(9, 4, 2).labeling, SpectrumMode::strict);
  const Json bspec = spectrum_to_json(*b.spectrum, true);
  CHECK(bspec.at("negative_constants") ==
        std::vector<std::string>{"-0.54", "-0.62", "-0.70", "-0.78"});
}

TEST_CASE("generate documents carry labeling, reports and status") {
  const GenerateDocument ok = run_generate(Family::m_magic, 9, 4);
  CHECK(ok.all_passed());
  const Json doc = Json::parse(document_to_json(ok));
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("checks").at("m_magic").at("passed") == true);
  CHECK(doc.at("checks").at("conformance").at("passed") == true);
  CHECK(doc.at("spectrum").at("constants") ==
        std::vector<std::string>{"0.29", "0.32", "0.36", "0.38"});
  CHECK(doc.at("admissibility").at("admissible") == true);

  const GenerateDocument failing = run_generate(Family::bimagic, 9, 0);
  CHECK_FALSE(failing.all_passed());
  const Json fdoc = Json::parse(document_to_json(failing));
  CHECK(fdoc.at("status") == "verification-failed");
  CHECK(fdoc.at("checks").at("m_magic").at("passed") == false);
  CHECK(fdoc.at("checks").at("conformance").at("passed") == true);

  CHECK_THROWS_AS(run_generate(Family::m_magic, 8, 4), InadmissibleError);
}

TEST_CASE("table format pins the tabulated rows") {
  const std::string table = document_to_table(run_generate(Family::m_magic, 9, 4));
  CHECK(table.find("sigma: 0.01 0.02 0.03 0.04 0.05 0.06 0.07 0.08 0.09\n") != std::string::npos);
  CHECK(table.find("mu: 0.26 0.24 0.25 0.23 0.25 0.23 0.23 0.21\n") != std::string::npos);
  CHECK(table.find("constants: 0.29 0.32 0.36 0.38\n") != std::string::npos);
  CHECK(table.find("status: pass\n") != std::string::npos);

  const std::string bipolar = document_to_table(run_generate(Family::bipolar_m_magic, 9, 4));
  CHECK(bipolar.find("sigma_p: 0.01 0.04 0.05 0.08 0.09 0.12 0.13 0.16 0.17\n") !=
        std::string::npos);
  CHECK(bipolar.find("mu_n: -0.49 -0.45 -0.49 -0.45 -0.49 -0.45 -0.49 -0.45\n") !=
        std::string::npos);
  CHECK(bipolar.find("constants: (0.54,-0.54) (0.62,-0.62) (0.70,-0.70) (0.78,-0.78)\n") !=
        std::string::npos);
}

TEST_CASE("sweep CSV is complete, ordered and byte-stable") {
  const std::vector<SweepRow> rows = run_sweep(Family::m_magic, 3, 5, 0, 2);
  const std::string csv = sweep_to_csv(rows);
  const std::string expected =
      "family,n,m,a,scale_exp,constants,all_checks_passed\n"
      "m-magic,7,3,0,2,0.23;0.26;0.30,true\n"
      "m-magic,10,3,1,2,0.32;0.35;0.39,true\n"
      "m-magic,13,3,2,2,0.41;0.44;0.48,true\n"
      "m-magic,9,4,0,2,0.29;0.32;0.36;0.38,true\n"
      "m-magic,13,4,1,2,0.41;0.44;0.48;0.50,true\n"
      "m-magic,17,4,2,2,0.53;0.56;0.60;0.62,true\n"
      "m-magic,11,5,0,2,0.35;0.38;0.42;0.44;0.46,true\n"
      "m-magic,16,5,1,2,0.50;0.53;0.57;0.59;0.61,true\n"
      "m-magic,21,5,2,2,0.65;0.68;0.72;0.74;0.76,true\n";
  CHECK(csv == expected);
  CHECK(sweep_to_csv(run_sweep(Family::m_magic, 3, 5, 0, 2)) == csv);

  const std::vector<SweepRow> bipolar = run_sweep(Family::bipolar_m_magic, 3, 3, 0, 1);
  CHECK(bipolar.size() == 2);
  CHECK(bipolar[0].all_checks_passed);
  CHECK(bipolar[0].case_tag == CaseTag::case1_m_odd);
  CHECK(bipolar[1].case_tag == CaseTag::case2_m_odd);

  CHECK_THROWS_AS(run_sweep(Family::magic, 1, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(Family::m_magic, 5, 3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(Family::m_magic, 3, 5, 2, 1), std::invalid_argument);
}

TEST_CASE("every emitted decimal carries exactly scale_exp fraction digits") {
  std::mt19937_64 rng(31);
  const std::regex decimal_re("-?[0-9]+\\.([0-9]+)");
  const auto check_digits = [&](const std::string& text, int p) {
    for (std::sregex_iterator it(text.begin(), text.end(), decimal_re), end; it != end; ++it) {
      CHECK(static_cast<int>((*it)[1].length()) == p);
    }
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Labeling labeling = random_labeling(rng);
    const int p = std::visit([](const auto& l) { return l.scale_exp; }, labeling);
    check_digits(labeling_to_json(labeling).dump() + "\n" + render_dot(labeling), p);
  }
  // table, report and CSV renderings obey the same rule
  const GenerateDocument doc = run_generate(Family::bipolar_m_magic, 13, 4);  // scale_exp 3
  check_digits(document_to_table(doc), 3);
  check_digits(document_to_json(doc), 3);
  check_digits(sweep_to_csv(run_sweep(Family::m_magic, 3, 3, 0, 1)), 2);
  check_digits(report_to_json(check_anti_fuzzy(make_path_labeling(2, 3, {500, 500}, {400}))).dump(),
               3);
}

TEST_CASE("extension instances carry an explanatory note") {
  const GenerateDocument doc = run_generate(Family::m_magic, 7, 2);
  CHECK(doc.all_passed());
  const Json out = Json::parse(document_to_json(doc));
  REQUIRE(out.at("notes").size() == 1);
  CHECK(out.at("notes").at(0).get<std::string>().find("extension") != std::string::npos);
  CHECK(Json::parse(document_to_json(run_generate(Family::m_magic, 9, 4))).at("notes").empty());
}
