#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sierpack/base_graph.hpp"
#include "sierpack/graph.hpp"
#include "sierpack/packing.hpp"
#include "sierpack/sat/solver.hpp"
#include "sierpack/sierp_graph.hpp"
#include "sierpack/word.hpp"

namespace sierpack {

/// How a pattern prefix [block] suffix is stretched to a target length.
enum class Convention {
  exact_fit_drop_suffix,  ///< prefix + block^m, exact length
  exact_fit,              ///< prefix + block^m + suffix, exact length
  truncate_tail,          ///< block repeated from its start and cut at the end
  truncate_head,          ///< block repeated towards its end and cut at the start
};

inline constexpr Convention all_conventions[] = {Convention::exact_fit_drop_suffix, Convention::exact_fit,
                                                 Convention::truncate_tail, Convention::truncate_head};

const char* to_string(Convention c);
/// Accepts the names printed by to_string. Throws ParseError otherwise.
Convention parse_convention(std::string_view text);

/// Color sequence with one repeatable block, written like "52142[1312]1".
struct ColorPattern {
  std::vector<int> prefix;
  std::vector<int> block;
  std::vector<int> suffix;

  static ColorPattern parse(std::string_view text);
  std::string str() const;
};

/// Exactly `length` colors, or nullopt if `convention` cannot reach it.
std::optional<std::vector<int>> try_expand(const ColorPattern& p, int length, Convention convention);

/// As try_expand, but throws PreconditionError naming the length deficit.
std::vector<int> expand_pattern(const ColorPattern& p, int length, Convention convention);

/// Packing coloring of S^2_{P_k}: the explicit 3-coloring for k = 3, the
/// four-case formula (4 colors) for k >= 4.
Coloring color_path_dim2(int k);

/// Packing coloring of S^n_{P_k}, n >= 2. For k >= 4 and n >= 3 the
/// five-case formula on the last three symbols; k = 3 lifts the 3-coloring.
Coloring color_path(int k, int n, const BuildLimits& limits = {});

/// Four-case formula read cyclically on S^2_{C_k}, k = 0 (mod 4).
Coloring color_cycle_dim2_div4(int k);

/// S^2_{C_k}, k = 2 (mod 4), k >= 10: copy i is colored from ii onwards by
/// 121314[1213] (i even) or 4121314213[1213] (i odd). Throws
/// VerificationError if the result is not a packing coloring.
Coloring color_cycle_dim2_mod2(int k);

struct CycleOptions {
  /// Only try this expansion convention first-choice (default: each in turn).
  std::optional<Convention> convention;
  /// Overrides the stored seed coloring for k = 9 or the C_13 seed.
  std::optional<std::string> seed_file;
  std::string seed_dir = SIERPACK_DATA_DIR "/seeds";
  bool sat_fallback = true;
  sat::SolveBudget budget;
  BuildLimits limits;
};

struct Construction {
  Coloring coloring;  ///< on S^n_{C_k}
  /// formula | table | seed | block-repetition | sat-lift | sat
  std::string method;
  std::optional<Convention> convention;
  /// Extendable coloring of S^2 (or S^3 for sat-lift) that was lifted;
  /// empty for formulas and for direct SAT on S^n.
  std::optional<Coloring> seed;
  /// Why earlier methods were skipped, in order tried.
  std::vector<std::string> notes;
};

/// Packing coloring of S^n_{C_k} with at most 5 colors, n >= 2, k >= 4,
/// k not in {5, 6, 7}.
///
/// For n >= 3 a dimension-2 seed is lifted only if it has no self-copy
/// clash. Otherwise (SAT fallback on) liftable seeds of S^2 and S^3 are
/// tried, then a packing 5-coloring of S^n itself.
Construction color_cycle(int k, int n, const CycleOptions& options = {});

/// Sequence for copy i of S^2_{C_k} from the cycle tables (k = 4t+2, t >= 2
/// or k = 4t+3, t >= 1), as written before expansion.
ColorPattern cycle_table_row(int k, int i);

/// Dimension-2 coloring assembled from per-copy sequences: copy i gets
/// seq[i][p] at vertex i(i+p mod k).
Coloring coloring_from_sequences(int k, const std::vector<std::vector<int>>& sequences);
std::vector<std::vector<int>> sequences_from_coloring(int k, const Coloring& f);

/// First offset p in [2, 8] with 1213 at positions p..p+3 of the copy's
/// sequence, or -1.
int c13_block_offset(const std::vector<int>& sequence);

/// Extends the C_13 seed to S^2_{C_{13+4r}}: copies 0-3 are repeated r times
/// after copy 3, and every sequence gets r extra 1213 blocks in front of
/// its own 1213. Requires seed copy 4 to equal copy 0.
Coloring block_repetition(const Coloring& c13_seed, int k);

/// Loads `seed_dir`/cycle<k>.col (k = 9 or 13), checked extendable.
Coloring load_cycle_seed(int k, const CycleOptions& options = {});

enum class Witness { h_prime, h };

struct WitnessSubgraph {
  SierpGraph host;
  std::vector<Word> words;
  std::vector<VertexId> vertices;  ///< host ids, in the order of `words`
  Graph induced;                   ///< vertex i is words[i]
};

/// H' on A = {11, 12, 13, 14, 20, 21, 22, 23} in S^2_{P_k} (k >= 5), or H on
/// a 21-word set B in S^3_{P_k} (k >= 4).
WitnessSubgraph witness_subgraph(Witness which, int k);
std::vector<std::string> witness_words(Witness which);

}  // namespace sierpack
