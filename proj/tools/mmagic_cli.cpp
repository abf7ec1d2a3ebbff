// Command-line front end. Links the shared C API only; argument and config
// handling stays on this side of the boundary.

#include <mmagic/mmagic.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

// Process exit codes. Domain outcomes use 0/1/2; data problems use 3 and
// usage problems 64 so scripts can tell them apart.
constexpr int kExitPass = 0;
constexpr int kExitInadmissible = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitDataError = 3;
constexpr int kExitUsage = 64;

int exit_code_for(int status) {
  switch (status) {
    case MMAGIC_OK: return kExitPass;
    case MMAGIC_ERR_INADMISSIBLE:
    case MMAGIC_ERR_LABEL_RANGE: return kExitInadmissible;
    case MMAGIC_ERR_VERIFICATION: return kExitVerificationFailed;
    case MMAGIC_ERR_PARSE:
    case MMAGIC_ERR_IO: return kExitDataError;
    default: return kExitUsage;
  }
}

int fail(int status) {
  std::cerr << "error (" << mmagic_status_name(status) << "): " << mmagic_last_error() << "\n";
  return exit_code_for(status);
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { mmagic_string_free(text); }
  std::string str() const { return text ? std::string(text) : std::string(); }
};

struct OwnedLabeling {
  mmagic_labeling* handle = nullptr;
  ~OwnedLabeling() { mmagic_labeling_free(handle); }
};

bool write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return false;
  }
  return true;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Any flag can come from a JSON config object instead; explicit command-line
// flags win. Keys are the long option names without dashes prefix, e.g.
// {"family": "m-magic", "n": 9, "m": 4}.
struct ConfigFile {
  nlohmann::json doc = nlohmann::json::object();
  bool loaded = false;

  bool load(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
      std::cerr << "error: cannot read config file " << path << "\n";
      return false;
    }
    doc = nlohmann::json::parse(*text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      std::cerr << "error: config file " << path << " is not a JSON object\n";
      return false;
    }
    loaded = true;
    return true;
  }

  template <typename T>
  void fill(const CLI::Option* opt, const char* key, T& value) const {
    if (!loaded || (opt && opt->count() > 0) || !doc.contains(key)) return;
    value = doc.at(key).get<T>();
  }
};

bool parse_range(const std::string& text, long long& lo, long long& hi) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) return false;
  try {
    lo = std::stoll(text.substr(0, sep));
    hi = std::stoll(text.substr(sep + 2));
  } catch (...) {
    return false;
  }
  return true;
}

int run_generate(const std::string& family, long long n, int m, int scale_exp,
                 const std::string& format, const std::string& out_path, bool m_given) {
  const bool fixed_m = family == "magic" || family == "bimagic" || family == "bipolar-magic";
  if (fixed_m && m_given) {
    std::cerr << "error: --m conflicts with --family " << family << " (its constant count is fixed)\n";
    return kExitUsage;
  }
  if (!fixed_m && !m_given) {
    std::cerr << "error: --family " << family << " needs --m\n";
    return kExitUsage;
  }
  OwnedString doc;
  const int status =
      mmagic_generate_document(family.c_str(), n, m, scale_exp, format.c_str(), &doc.text);
  if (status == MMAGIC_ERR_INADMISSIBLE) {
    std::cerr << "inadmissible: " << mmagic_last_error() << "\n";
    return kExitInadmissible;
  }
  if (status != MMAGIC_OK && status != MMAGIC_ERR_VERIFICATION) return fail(status);
  if (!write_output(doc.str(), out_path)) return kExitDataError;
  return status == MMAGIC_OK ? kExitPass : kExitVerificationFailed;
}

int run_verify(const std::string& input, int m, const std::string& mode) {
  auto text = read_file(input);
  if (!text) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitDataError;
  }
  OwnedLabeling labeling;
  int status = mmagic_labeling_from_json(text->c_str(), &labeling.handle);
  if (status != MMAGIC_OK) return fail(status);
  OwnedString report;
  status = mmagic_verify(labeling.handle, m, mode.c_str(), &report.text);
  std::cout << report.str() << "\n";
  if (status == MMAGIC_OK) return kExitPass;
  if (status == MMAGIC_ERR_VERIFICATION) return kExitVerificationFailed;
  return fail(status);
}

int run_oracle(long long n, int m, long long grid, int scale_exp, const std::string& mode,
               const std::string& family, long long limit, bool allow_large,
               const std::string& out_path) {
  std::ofstream file_out;
  std::ostream* sink = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file_out.open(out_path, std::ios::binary);
    if (!file_out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitDataError;
    }
    sink = &file_out;
  }

  mmagic_oracle_params params{};
  params.n = n;
  params.m = m;
  params.grid = grid;
  params.scale_exp = scale_exp;
  params.mode = mode.c_str();
  params.family = family.c_str();
  params.limit = limit;
  params.allow_large = allow_large ? 1 : 0;
  params.max_cells = 0;

  mmagic_oracle_outcome outcome{};
  const auto emit = [](const char* line, void* user) -> int {
    *static_cast<std::ostream*>(user) << line << "\n";
    return 1;
  };
  const int status = mmagic_oracle_search(&params, emit, sink, &outcome);
  if (status != MMAGIC_OK) return fail(status);
  *sink << "{\"verdict\":\"" << (outcome.found ? "found" : "exhausted-none")
        << "\",\"witness_count\":" << outcome.witnesses_emitted
        << ",\"nodes_visited\":" << outcome.nodes_visited << "}\n";
  return outcome.found ? kExitPass : kExitVerificationFailed;
}

int run_sweep(const std::string& family, const std::string& m_range, const std::string& a_range,
              const std::string& out_path) {
  long long m_lo = 0, m_hi = 0, a_lo = 0, a_hi = 0;
  if (!parse_range(m_range, m_lo, m_hi) || !parse_range(a_range, a_lo, a_hi)) {
    std::cerr << "error: ranges are written LO..HI, e.g. --m-range 3..8\n";
    return kExitUsage;
  }
  OwnedString csv;
  const int status = mmagic_sweep_csv(family.c_str(), static_cast<int>(m_lo),
                                      static_cast<int>(m_hi), a_lo, a_hi, &csv.text);
  if (status != MMAGIC_OK) return fail(status);
  if (!write_output(csv.str(), out_path)) return kExitDataError;
  return kExitPass;
}

int run_render(const std::string& input, const std::string& out_path) {
  auto text = read_file(input);
  if (!text) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitDataError;
  }
  OwnedLabeling labeling;
  int status = mmagic_labeling_from_json(text->c_str(), &labeling.handle);
  if (status != MMAGIC_OK) return fail(status);
  OwnedString dot;
  status = mmagic_render_dot(labeling.handle, &dot.text);
  if (status != MMAGIC_OK) return fail(status);
  if (!write_output(dot.str(), out_path)) return kExitDataError;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-magic labelings of anti-fuzzy and bipolar anti-fuzzy path graphs"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "construct a labeling and verify it");
  std::string g_family, g_format = "json", g_out, g_config;
  long long g_n = 0;
  int g_m = 0, g_scale = 0;
  auto* g_family_opt = generate->add_option("--family", g_family,
                                            "magic | bimagic | m-magic | bipolar-magic | bipolar-m-magic");
  auto* g_n_opt = generate->add_option("--n", g_n, "vertex count");
  auto* g_m_opt = generate->add_option("--m", g_m, "constant count (m-magic families)");
  auto* g_scale_opt = generate->add_option("--scale-exp", g_scale, "override the tabulated scale exponent");
  auto* g_format_opt = generate->add_option("--format", g_format, "json | dot | table");
  auto* g_out_opt = generate->add_option("--out", g_out, "output path (default stdout)");
  generate->add_option("--config", g_config, "JSON config file supplying any of the flags");

  // verify
  auto* verify = app.add_subcommand("verify", "check a labeling file against the definitions");
  std::string v_input, v_mode = "strict", v_config;
  int v_m = 0;
  auto* v_input_opt = verify->add_option("--input", v_input, "labeling JSON file");
  auto* v_m_opt = verify->add_option("--m", v_m, "expected constant count");
  auto* v_mode_opt = verify->add_option("--mode", v_mode, "strict | lax");
  verify->add_option("--config", v_config, "JSON config file supplying any of the flags");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive search over quantized labelings");
  std::string o_mode = "lax", o_family = "anti-fuzzy", o_out, o_config;
  long long o_n = 0, o_grid = 0, o_limit = 10;
  int o_m = 0, o_scale = 0;
  bool o_allow_large = false;
  auto* o_n_opt = oracle->add_option("--n", o_n, "vertex count (<= 7 by default)");
  auto* o_m_opt = oracle->add_option("--m", o_m, "constant count");
  auto* o_grid_opt = oracle->add_option("--grid", o_grid, "labels range over 1..grid units (<= 40 by default)");
  auto* o_scale_opt = oracle->add_option("--scale-exp", o_scale, "scale exponent (default 2)");
  auto* o_mode_opt = oracle->add_option("--mode", o_mode, "strict | lax");
  auto* o_family_opt = oracle->add_option("--family", o_family, "anti-fuzzy | bipolar");
  auto* o_limit_opt = oracle->add_option("--limit", o_limit, "stop after this many witnesses");
  auto* o_allow_opt = oracle->add_flag("--allow-large", o_allow_large, "lift the n/grid guard");
  auto* o_out_opt = oracle->add_option("--out", o_out, "witness stream path (default stdout)");
  oracle->add_option("--config", o_config, "JSON config file supplying any of the flags");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV report over a family grid");
  std::string s_family, s_m_range, s_a_range, s_out, s_config;
  auto* s_family_opt = sweep->add_option("--family", s_family, "m-magic | bipolar-m-magic");
  auto* s_m_opt = sweep->add_option("--m-range", s_m_range, "A..B");
  auto* s_a_opt = sweep->add_option("--a-range", s_a_range, "0..L");
  auto* s_out_opt = sweep->add_option("--out", s_out, "output path (default stdout)");
  sweep->add_option("--config", s_config, "JSON config file supplying any of the flags");

  // render
  auto* render = app.add_subcommand("render", "DOT drawing of a labeling file");
  std::string r_input, r_out, r_config;
  auto* r_input_opt = render->add_option("--input", r_input, "labeling JSON file");
  auto* r_out_opt = render->add_option("--out", r_out, "output path (default stdout)");
  render->add_option("--config", r_config, "JSON config file supplying any of the flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      ConfigFile cfg;
      if (!g_config.empty() && !cfg.load(g_config)) return kExitDataError;
      cfg.fill(g_family_opt, "family", g_family);
      cfg.fill(g_n_opt, "n", g_n);
      cfg.fill(g_m_opt, "m", g_m);
      cfg.fill(g_scale_opt, "scale-exp", g_scale);
      cfg.fill(g_format_opt, "format", g_format);
      cfg.fill(g_out_opt, "out", g_out);
      if (g_family.empty() || g_n == 0) {
        std::cerr << "error: generate needs --family and --n\n";
        return kExitUsage;
      }
      const bool m_given = g_m_opt->count() > 0 || (cfg.loaded && cfg.doc.contains("m"));
      return run_generate(g_family, g_n, g_m, g_scale, g_format, g_out, m_given);
    }
    if (verify->parsed()) {
      ConfigFile cfg;
      if (!v_config.empty() && !cfg.load(v_config)) return kExitDataError;
      cfg.fill(v_input_opt, "input", v_input);
      cfg.fill(v_m_opt, "m", v_m);
      cfg.fill(v_mode_opt, "mode", v_mode);
      if (v_input.empty() || v_m == 0) {
        std::cerr << "error: verify needs --input and --m\n";
        return kExitUsage;
      }
      return run_verify(v_input, v_m, v_mode);
    }
    if (oracle->parsed()) {
      ConfigFile cfg;
      if (!o_config.empty() && !cfg.load(o_config)) return kExitDataError;
      cfg.fill(o_n_opt, "n", o_n);
      cfg.fill(o_m_opt, "m", o_m);
      cfg.fill(o_grid_opt, "grid", o_grid);
      cfg.fill(o_scale_opt, "scale-exp", o_scale);
      cfg.fill(o_mode_opt, "mode", o_mode);
      cfg.fill(o_family_opt, "family", o_family);
      cfg.fill(o_limit_opt, "limit", o_limit);
      cfg.fill(o_allow_opt, "allow-large", o_allow_large);
      cfg.fill(o_out_opt, "out", o_out);
      if (o_n == 0 || o_m == 0 || o_grid == 0) {
        std::cerr << "error: oracle needs --n, --m and --grid\n";
        return kExitUsage;
      }
      return run_oracle(o_n, o_m, o_grid, o_scale, o_mode, o_family, o_limit, o_allow_large, o_out);
    }
    if (sweep->parsed()) {
      ConfigFile cfg;
      if (!s_config.empty() && !cfg.load(s_config)) return kExitDataError;
      cfg.fill(s_family_opt, "family", s_family);
      cfg.fill(s_m_opt, "m-range", s_m_range);
      cfg.fill(s_a_opt, "a-range", s_a_range);
      cfg.fill(s_out_opt, "out", s_out);
      if (s_family.empty() || s_m_range.empty() || s_a_range.empty()) {
        std::cerr << "error: sweep needs --family, --m-range and --a-range\n";
        return kExitUsage;
      }
      return run_sweep(s_family, s_m_range, s_a_range, s_out);
    }
    if (render->parsed()) {
      ConfigFile cfg;
      if (!r_config.empty() && !cfg.load(r_config)) return kExitDataError;
      cfg.fill(r_input_opt, "input", r_input);
      cfg.fill(r_out_opt, "out", r_out);
      if (r_input.empty()) {
        std::cerr << "error: render needs --input\n";
        return kExitUsage;
      }
      return run_render(r_input, r_out);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config value has the wrong type: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}
