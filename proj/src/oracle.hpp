#pragma once

#include <functional>

#include "verification.hpp"

namespace mmagic {

/// Exhaustive-search parameters. Labels range over {1..grid} units for sigma
/// and mu (positive channel only for the bipolar family; the negative channel
/// is the mirror image).
struct OracleParams {
  std::int64_t n = 0;
  int m = 0;
  std::int64_t grid = 0;
  int scale_exp = 2;
  SpectrumMode mode = SpectrumMode::lax;
  ScaleFamily family = ScaleFamily::anti_fuzzy;
  std::int64_t limit = 1;    // stop after this many witnesses
  bool allow_large = false;  // override the n <= 7 / grid <= 40 guard
  double max_cells = 0;      // <= 0: use MMAGIC_MAX_ORACLE_CELLS if set
};

enum class OracleVerdict { found, exhausted_none };

const char* oracle_verdict_name(OracleVerdict verdict);

struct OracleOutcome {
  OracleVerdict verdict = OracleVerdict::exhausted_none;
  std::int64_t witnesses_emitted = 0;
  std::uint64_t nodes_visited = 0;
};

/// Called once per accepted labeling, in lexicographic-by-units order over
/// (sigma, mu). Return false to stop the enumeration early.
using WitnessFn = std::function<bool(const Labeling&)>;

/// Enumerates every labeling on the grid, pruning edges below the anti-fuzzy
/// bound and prefixes whose sums already exceed m distinct constants, and
/// emits those whose spectrum passes the requested mode with exactly m
/// constants. The run stops once `limit` witnesses are emitted (or the
/// callback asks to stop); a verdict of exhausted_none always means the full
/// space was swept.
OracleOutcome brute_force_search(const OracleParams& params, const WitnessFn& on_witness);

struct OracleResult {
  OracleOutcome outcome;
  std::vector<Labeling> witnesses;
};

/// Convenience wrapper collecting up to params.limit witnesses.
OracleResult brute_force_search(const OracleParams& params);

/// The acceptance predicate the enumeration applies to each grid point:
/// all units in [1, grid] (mirrored on the negative channel) and
/// verify_m_magic(labeling, m, mode) passes.
bool oracle_accepts(const Labeling& labeling, const OracleParams& params);

/// The raw label-vector space size grid^(2n-1), the quantity capped by
/// MMAGIC_MAX_ORACLE_CELLS.
double oracle_cell_count(const OracleParams& params);

/// Checks that the closed-form generator output for (family, n, m) lies in
/// the oracle's feasible set on a grid covering its labels: every unit fits
/// the grid and the enumeration's acceptance predicate holds. On spaces small
/// enough to sweep outright, the labeling is additionally rediscovered by a
/// real enumeration run. grid = 0 uses the labeling's own maximum unit.
CheckReport cross_check_generator(std::int64_t n, int m, ScaleFamily family, std::int64_t grid = 0);

}  // namespace mmagic
