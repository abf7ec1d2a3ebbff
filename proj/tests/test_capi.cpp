#include <doctest.h>

#include <mmagic/mmagic.h>

#include <string>
#include <vector>

namespace {

struct Str {
  char* text = nullptr;
  ~Str() { mmagic_string_free(text); }
  std::string get() const { return text ? std::string(text) : std::string(); }
};

struct Handle {
  mmagic_labeling* value = nullptr;
  ~Handle() { mmagic_labeling_free(value); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(mmagic_version()) == "1.0.0");
  CHECK(std::string(mmagic_status_name(MMAGIC_OK)) == "ok");
  CHECK(std::string(mmagic_status_name(MMAGIC_ERR_INADMISSIBLE)) == "inadmissible");
}

TEST_CASE("select_scale and formatting") {
  int p = 0;
  CHECK(mmagic_select_scale(9, 4, "anti-fuzzy", &p) == MMAGIC_OK);
  CHECK(p == 2);
  CHECK(mmagic_select_scale(35, 2, "bipolar", &p) == MMAGIC_OK);
  CHECK(p == 4);
  CHECK(mmagic_select_scale(8, 4, "anti-fuzzy", &p) == MMAGIC_ERR_INADMISSIBLE);
  CHECK(std::string(mmagic_last_error()).find("mod m") != std::string::npos);
  CHECK(mmagic_select_scale(9, 4, "triangular", &p) == MMAGIC_ERR_INVALID_ARGUMENT);

  Str text;
  CHECK(mmagic_format_units(-49, 2, &text.text) == MMAGIC_OK);
  CHECK(text.get() == "-0.49");
}

TEST_CASE("admissibility struct") {
  mmagic_admissibility adm{};
  CHECK(mmagic_admissible(10, 3, "bipolar", &adm) == MMAGIC_OK);
  CHECK(adm.admissible == 1);
  CHECK(adm.a == 1);
  CHECK(std::string(adm.case_tag) == "case2-m-odd");

  CHECK(mmagic_admissible(8, 4, "anti-fuzzy", &adm) == MMAGIC_OK);
  CHECK(adm.admissible == 0);
}

TEST_CASE("generate, inspect and serialize a labeling") {
  Handle labeling;
  REQUIRE(mmagic_generate("m-magic", 9, 4, 0, &labeling.value) == MMAGIC_OK);

  int kind = -1;
  int64_t n = 0;
  int p = 0;
  CHECK(mmagic_labeling_kind(labeling.value, &kind) == MMAGIC_OK);
  CHECK(kind == 0);
  CHECK(mmagic_labeling_vertex_count(labeling.value, &n) == MMAGIC_OK);
  CHECK(n == 9);
  CHECK(mmagic_labeling_scale_exp(labeling.value, &p) == MMAGIC_OK);
  CHECK(p == 2);

  size_t len = 0;
  CHECK(mmagic_labeling_units(labeling.value, MMAGIC_SEQ_MU, nullptr, 0, &len) == MMAGIC_OK);
  REQUIRE(len == 8);
  std::vector<int64_t> mu(len);
  CHECK(mmagic_labeling_units(labeling.value, MMAGIC_SEQ_MU, mu.data(), mu.size(), &len) ==
        MMAGIC_OK);
  CHECK(mu == std::vector<int64_t>{26, 24, 25, 23, 25, 23, 23, 21});
  CHECK(mmagic_labeling_units(labeling.value, MMAGIC_SEQ_SIGMA_N, nullptr, 0, &len) ==
        MMAGIC_ERR_INVALID_ARGUMENT);

  Str json;
  REQUIRE(mmagic_labeling_to_json(labeling.value, &json.text) == MMAGIC_OK);
  Handle reparsed;
  REQUIRE(mmagic_labeling_from_json(json.text, &reparsed.value) == MMAGIC_OK);
  Str json2;
  REQUIRE(mmagic_labeling_to_json(reparsed.value, &json2.text) == MMAGIC_OK);
  CHECK(json.get() == json2.get());
}

TEST_CASE("verification statuses carry reports either way") {
  Handle labeling;
  REQUIRE(mmagic_generate("m-magic", 9, 4, 0, &labeling.value) == MMAGIC_OK);

  Str pass_report;
  CHECK(mmagic_verify(labeling.value, 4, "strict", &pass_report.text) == MMAGIC_OK);
  CHECK(pass_report.get().find("\"passed\": true") != std::string::npos);

  Str fail_report;
  CHECK(mmagic_verify(labeling.value, 3, "strict", &fail_report.text) ==
        MMAGIC_ERR_VERIFICATION);
  CHECK(fail_report.get().find("constant-count") != std::string::npos);

  Str conformance;
  CHECK(mmagic_conformance(labeling.value, 4, "m-magic", &conformance.text) == MMAGIC_OK);

  Str spectrum;
  CHECK(mmagic_spectrum(labeling.value, "strict", &spectrum.text) == MMAGIC_OK);
  CHECK(spectrum.get().find("0.38") != std::string::npos);
}

TEST_CASE("document pipeline statuses") {
  Str ok_doc;
  CHECK(mmagic_generate_document("magic", 5, 0, 0, "table", &ok_doc.text) == MMAGIC_OK);
  CHECK(ok_doc.get().find("constants: 0.15") != std::string::npos);

  Str failing_doc;
  CHECK(mmagic_generate_document("bimagic", 9, 0, 0, "json", &failing_doc.text) ==
        MMAGIC_ERR_VERIFICATION);
  CHECK(failing_doc.get().find("anti-fuzzy-edge") != std::string::npos);

  Str missing;
  CHECK(mmagic_generate_document("m-magic", 8, 4, 0, "json", &missing.text) ==
        MMAGIC_ERR_INADMISSIBLE);
  CHECK(missing.text == nullptr);
  CHECK(mmagic_generate_document("m-magic", 9, 4, 0, "yaml", &missing.text) ==
        MMAGIC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("render DOT through the C surface") {
  Handle labeling;
  REQUIRE(mmagic_generate("magic", 5, 0, 0, &labeling.value) == MMAGIC_OK);
  Str dot;
  REQUIRE(mmagic_render_dot(labeling.value, &dot.text) == MMAGIC_OK);
  CHECK(dot.get().find("v1 -- v2") != std::string::npos);
}

TEST_CASE("oracle search streams witnesses to the callback") {
  mmagic_oracle_params params{};
  params.n = 3;
  params.m = 1;
  params.grid = 5;
  params.scale_exp = 2;
  params.mode = "lax";
  params.family = "anti-fuzzy";
  params.limit = 3;

  std::vector<std::string> lines;
  const auto collect = [](const char* line, void* user) -> int {
    static_cast<std::vector<std::string>*>(user)->push_back(line);
    return 1;
  };
  mmagic_oracle_outcome outcome{};
  REQUIRE(mmagic_oracle_search(&params, collect, &lines, &outcome) == MMAGIC_OK);
  CHECK(outcome.found == 1);
  CHECK(outcome.witnesses_emitted == 3);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].find("\"sigma\":[1,1,1]") != std::string::npos);
  CHECK(lines[0].find("\"mu\":[1,1]") != std::string::npos);

  params.limit = 0;
  CHECK(mmagic_oracle_search(&params, collect, &lines, &outcome) ==
        MMAGIC_ERR_INVALID_ARGUMENT);
  params.limit = 1;
  params.n = 9;
  CHECK(mmagic_oracle_search(&params, collect, &lines, &outcome) == MMAGIC_ERR_SEARCH_BOUNDS);
}

TEST_CASE("cross check through the C surface") {
  Str report;
  CHECK(mmagic_cross_check(5, 1, "anti-fuzzy", 14, &report.text) == MMAGIC_OK);
  Str failing;
  CHECK(mmagic_cross_check(5, 1, "anti-fuzzy", 5, &failing.text) == MMAGIC_ERR_VERIFICATION);
  CHECK(failing.get().find("grid-too-small") != std::string::npos);
}

TEST_CASE("sweep CSV through the C surface") {
  Str csv;
  REQUIRE(mmagic_sweep_csv("m-magic", 3, 3, 0, 0, &csv.text) == MMAGIC_OK);
  CHECK(csv.get() ==
        "family,n,m,a,scale_exp,constants,all_checks_passed\n"
        "m-magic,7,3,0,2,0.23;0.26;0.30,true\n");
  CHECK(mmagic_sweep_csv("magic", 1, 1, 0, 0, &csv.text) == MMAGIC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null argument handling") {
  CHECK(mmagic_generate("m-magic", 9, 4, 0, nullptr) == MMAGIC_ERR_INVALID_ARGUMENT);
  CHECK(mmagic_labeling_kind(nullptr, nullptr) == MMAGIC_ERR_INVALID_ARGUMENT);
  Handle handle;
  CHECK(mmagic_labeling_from_json("{]", &handle.value) == MMAGIC_ERR_PARSE);
}
