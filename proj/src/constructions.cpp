#include "sierpack/constructions.hpp"

#include <algorithm>
#include <fstream>

#include "sierpack/errors.hpp"
#include "sierpack/io.hpp"
#include "sierpack/sat/cnf.hpp"

namespace sierpack {

const char* to_string(Convention c) {
  switch (c) {
    case Convention::exact_fit_drop_suffix: return "exact-fit-drop-suffix";
    case Convention::exact_fit: return "exact-fit";
    case Convention::truncate_tail: return "truncate-tail";
    case Convention::truncate_head: return "truncate-head";
  }
  return "?";
}

Convention parse_convention(std::string_view text) {
  for (Convention c : all_conventions) {
    if (text == to_string(c)) return c;
  }
  throw ParseError("unknown convention '" + std::string(text) + "'");
}

ColorPattern ColorPattern::parse(std::string_view text) {
  ColorPattern p;
  int part = 0;
  for (char ch : text) {
    if (ch == '[') {
      if (part != 0) throw ParseError("pattern '" + std::string(text) + "' has more than one block");
      part = 1;
    } else if (ch == ']') {
      if (part != 1) throw ParseError("unbalanced ']' in pattern '" + std::string(text) + "'");
      part = 2;
    } else if (ch >= '1' && ch <= '9') {
      (part == 0 ? p.prefix : part == 1 ? p.block : p.suffix).push_back(ch - '0');
    } else {
      throw ParseError("bad character in pattern '" + std::string(text) + "'");
    }
  }
  if (part == 1) throw ParseError("unterminated block in pattern '" + std::string(text) + "'");
  if (part == 0) {
    // No block: everything is a fixed prefix.
    return p;
  }
  if (p.block.empty()) throw ParseError("empty block in pattern '" + std::string(text) + "'");
  return p;
}

std::string ColorPattern::str() const {
  std::string out;
  for (int c : prefix) out += static_cast<char>('0' + c);
  if (!block.empty()) {
    out += '[';
    for (int c : block) out += static_cast<char>('0' + c);
    out += ']';
  }
  for (int c : suffix) out += static_cast<char>('0' + c);
  return out;
}

std::optional<std::vector<int>> try_expand(const ColorPattern& p, int length, Convention convention) {
  const int fixed_head = static_cast<int>(p.prefix.size());
  const int fixed_tail = convention == Convention::exact_fit_drop_suffix ? 0 : static_cast<int>(p.suffix.size());
  const int middle = length - fixed_head - fixed_tail;
  const int period = static_cast<int>(p.block.size());
  if (middle < 0) return std::nullopt;
  if (period == 0 && middle != 0) return std::nullopt;
  const bool exact = convention == Convention::exact_fit_drop_suffix || convention == Convention::exact_fit;
  if (exact && period != 0 && middle % period != 0) return std::nullopt;

  std::vector<int> out(p.prefix);
  for (int q = 0; q < middle; ++q) {
    int phase = convention == Convention::truncate_head ? ((q - middle) % period + period) % period : q % period;
    out.push_back(p.block[static_cast<std::size_t>(phase)]);
  }
  if (fixed_tail != 0) out.insert(out.end(), p.suffix.begin(), p.suffix.end());
  return out;
}

std::vector<int> expand_pattern(const ColorPattern& p, int length, Convention convention) {
  if (auto out = try_expand(p, length, convention)) return *out;
  int fixed = static_cast<int>(p.prefix.size() +
                               (convention == Convention::exact_fit_drop_suffix ? 0 : p.suffix.size()));
  std::string why = length < fixed ? "fixed part needs " + std::to_string(fixed - length) + " more positions"
                                   : "repeat part of length " + std::to_string(length - fixed) +
                                         " is not a multiple of " + std::to_string(p.block.size());
  throw PreconditionError("pattern " + p.str() + " cannot fill length " + std::to_string(length) + " under " +
                          to_string(convention) + ": " + why);
}

namespace {

void self_check(const SierpGraph& g, const Coloring& f, int max_colors, const std::string& what) {
  if (auto bad = verify_packing(g, f)) {
    throw VerificationError(what + " is not a packing coloring: " + g.label(bad->u) + " and " + g.label(bad->v) +
                            " share color " + std::to_string(bad->color) + " at distance " +
                            std::to_string(bad->distance));
  }
  if (f.c > max_colors) throw VerificationError(what + " uses more than " + std::to_string(max_colors) + " colors");
}

void check_extendable(const SierpGraph& plain, const Coloring& f, const std::string& what) {
  auto verdict = verify_extendable(plain, f);
  if (!verdict.valid) {
    const Violation& v = *verdict.violation;
    throw VerificationError(what + " is not extendable: " + plain.label(v.u) + " and " + plain.label(v.v) +
                            " share color " + std::to_string(v.color));
  }
}

// Four-case formula on the last two symbols i, j.
int four_case(int i, int j) {
  if (j % 2 == 0) return 1;
  if (i == j) return 4;
  return j % 4 == 1 ? 2 : 3;
}

int max_color(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

Coloring four_case_coloring(const BaseGraph& base) {
  const int k = base.order();
  Coloring f{GraphSpec{base.descriptor(), 2, Variant::plain, {0, 0}}.str(), 4, {}};
  f.colors.resize(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) f.colors[static_cast<std::size_t>(i * k + j)] = four_case(i, j);
  }
  return f;
}

Coloring five_case_coloring(const BaseGraph& base, int n, const BuildLimits& limits) {
  const std::uint64_t k = static_cast<std::uint64_t>(base.order());
  const std::uint64_t total = checked_power(base.order(), n);
  if (total == 0 || total > limits.vertex_budget) throw BudgetError("coloring exceeds the vertex budget");
  Coloring f{GraphSpec{base.descriptor(), n, Variant::plain, {0, 0}}.str(), 5, {}};
  f.colors.resize(total);
  for (std::uint64_t v = 0; v < total; ++v) {
    int j = static_cast<int>(v % k);
    int i = static_cast<int>(v / k % k);
    int s = static_cast<int>(v / (k * k) % k);
    int c = four_case(i, j);
    if (c == 4 && s % 2 == 1) c = 5;
    f.colors[v] = c;
  }
  return f;
}

}  // namespace

Coloring color_path_dim2(int k) {
  if (k < 3) throw PreconditionError("path colorings need k >= 3");
  SierpGraph s = build_sierpinski(BaseGraph::path(k), 2);
  Coloring f;
  if (k == 3) {
    f = Coloring{s.descriptor(), 3, {1, 2, 1, 1, 3, 1, 1, 2, 1}};
    self_check(s, f, 3, "path coloring");
  } else {
    f = four_case_coloring(s.base());
    self_check(s, f, 4, "path coloring");
  }
  return f;
}

Coloring color_path(int k, int n, const BuildLimits& limits) {
  if (k < 3) throw PreconditionError("path colorings need k >= 3");
  if (n < 2) throw PreconditionError("path colorings need n >= 2");
  if (n == 2) return color_path_dim2(k);
  BaseGraph base = BaseGraph::path(k);
  if (k == 3) return lift(base, 2, color_path_dim2(3), n, limits);
  Coloring f = five_case_coloring(base, n, limits);
  self_check(build_sierpinski(base, n, limits), f, 5, "path coloring");
  return f;
}

Coloring color_cycle_dim2_div4(int k) {
  if (k < 4 || k % 4 != 0) throw PreconditionError("this cycle formula needs k = 0 (mod 4)");
  SierpGraph s = build_sierpinski(BaseGraph::cycle(k), 2);
  Coloring f = four_case_coloring(s.base());
  self_check(s, f, 4, "cycle coloring");
  return f;
}

Coloring coloring_from_sequences(int k, const std::vector<std::vector<int>>& sequences) {
  if (static_cast<int>(sequences.size()) != k) throw PreconditionError("need one sequence per copy");
  Coloring f{GraphSpec{"cycle:" + std::to_string(k), 2, Variant::plain, {0, 0}}.str(), 0, {}};
  f.colors.resize(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    const auto& seq = sequences[static_cast<std::size_t>(i)];
    if (static_cast<int>(seq.size()) != k) throw PreconditionError("sequence length differs from the cycle length");
    for (int p = 0; p < k; ++p) f.colors[static_cast<std::size_t>(i * k + (i + p) % k)] = seq[static_cast<std::size_t>(p)];
  }
  f.c = max_color(f.colors);
  return f;
}

std::vector<std::vector<int>> sequences_from_coloring(int k, const Coloring& f) {
  if (f.colors.size() != static_cast<std::size_t>(k * k)) throw PreconditionError("coloring is not on S^2_{C_k}");
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int p = 0; p < k; ++p) out[static_cast<std::size_t>(i)].push_back(f.colors[static_cast<std::size_t>(i * k + (i + p) % k)]);
  }
  return out;
}

Coloring color_cycle_dim2_mod2(int k) {
  if (k < 10 || k % 4 != 2) throw PreconditionError("this cycle construction needs k = 2 (mod 4), k >= 10");
  const ColorPattern even = ColorPattern::parse("121314[1213]");
  const ColorPattern odd = ColorPattern::parse("4121314213[1213]");
  std::vector<std::vector<int>> seqs;
  for (int i = 0; i < k; ++i) seqs.push_back(expand_pattern(i % 2 == 0 ? even : odd, k, Convention::exact_fit));
  Coloring f = coloring_from_sequences(k, seqs);
  f.c = 4;
  self_check(build_sierpinski(BaseGraph::cycle(k), 2), f, 4, "cycle coloring");
  return f;
}

ColorPattern cycle_table_row(int k, int i) {
  if (i < 0 || i >= k) throw PreconditionError("copy index out of range");
  if (k % 4 == 2 && k >= 10) {
    const int t = (k - 2) / 4;
    static const char* const low[] = {"52142[1312]1", "[1213]2142131", "4[1312]41231", "[1312]412312"};
    static const char* const high[] = {"51214[1312]1", "14121[3121]541231", "21[3121]5131",
                                       "5[1312]412315", "413[1213]121",      "[1312]412312"};
    if (i < 4 * (t - 1)) return ColorPattern::parse(low[i % 4]);
    return ColorPattern::parse(high[i - 4 * (t - 1)]);
  }
  if (k % 4 == 3 && k >= 11) {
    if (i == k - 1) return ColorPattern::parse("512134[1213]2");
    static const char* const row[] = {"1213124[1213]1", "412134[1213]1", "1213124[1213]1", "512134[1213]1"};
    return ColorPattern::parse(row[i % 4]);
  }
  throw PreconditionError("no cycle table for k = " + std::to_string(k));
}

int c13_block_offset(const std::vector<int>& sequence) {
  static const int block[] = {1, 2, 1, 3};
  for (int p = 2; p <= 8 && p + 4 <= static_cast<int>(sequence.size()); ++p) {
    if (std::equal(std::begin(block), std::end(block), sequence.begin() + p)) return p;
  }
  return -1;
}

Coloring block_repetition(const Coloring& c13_seed, int k) {
  if (k < 13 || k % 4 != 1) throw PreconditionError("block repetition needs k = 1 (mod 4), k >= 13");
  auto seed = sequences_from_coloring(13, c13_seed);
  if (seed[4] != seed[0]) throw PreconditionError("seed copy 4 must repeat copy 0");
  std::vector<int> offsets;
  for (const auto& seq : seed) {
    offsets.push_back(c13_block_offset(seq));
    if (offsets.back() < 0) throw PreconditionError("seed copy lacks a 1213 block away from its ends");
  }
  const int r = (k - 13) / 4;
  std::vector<int> source = {0, 1, 2, 3};
  for (int rep = 0; rep < r; ++rep) source.insert(source.end(), {0, 1, 2, 3});
  for (int i = 4; i < 13; ++i) source.push_back(i);
  static const int block[] = {1, 2, 1, 3};
  std::vector<std::vector<int>> seqs;
  for (int src : source) {
    auto seq = seed[static_cast<std::size_t>(src)];
    auto at = seq.begin() + offsets[static_cast<std::size_t>(src)];
    for (int rep = 0; rep < r; ++rep) at = seq.insert(at, std::begin(block), std::end(block));
    seqs.push_back(std::move(seq));
  }
  Coloring f = coloring_from_sequences(k, seqs);
  f.c = std::max(f.c, c13_seed.c);
  return f;
}

Coloring load_cycle_seed(int k, const CycleOptions& options) {
  std::string path = options.seed_file.value_or(options.seed_dir + "/cycle" + std::to_string(k) + ".col");
  SierpGraph s = build_sierpinski(BaseGraph::cycle(k), 2);
  Coloring f = load_coloring_file(path, LabeledGraph::from(s));
  if (f.colors.size() != s.num_vertices()) throw PreconditionError("seed '" + path + "' is not on " + s.descriptor());
  self_check(s, f, 5, "seed '" + path + "'");
  check_extendable(s, f, "seed '" + path + "'");
  return f;
}

namespace {

// Table colorings: each row takes the first convention (starting from
// `first`) that reaches length k.
std::optional<Coloring> table_coloring(int k, Convention first, std::string& note) {
  std::vector<Convention> order;
  auto at = std::find(std::begin(all_conventions), std::end(all_conventions), first);
  order.insert(order.end(), at, std::end(all_conventions));
  order.insert(order.end(), std::begin(all_conventions), at);
  std::vector<std::vector<int>> seqs;
  for (int i = 0; i < k; ++i) {
    ColorPattern row = cycle_table_row(k, i);
    std::optional<std::vector<int>> seq;
    for (Convention c : order) {
      if ((seq = try_expand(row, k, c))) break;
    }
    if (!seq) {
      note = "row " + std::to_string(i) + " (" + row.str() + ") cannot be stretched to length " + std::to_string(k);
      return std::nullopt;
    }
    seqs.push_back(std::move(*seq));
  }
  Coloring f = coloring_from_sequences(k, seqs);
  f.c = 5;
  SierpGraph s = build_sierpinski(BaseGraph::cycle(k), 2);
  auto verdict = verify_extendable(s, f);
  if (!verdict.valid) {
    const Violation& v = *verdict.violation;
    note = std::string("convention ") + to_string(first) + ": " + s.label(v.u) + " and " + s.label(v.v) +
           " share color " + std::to_string(v.color) + " at distance " + std::to_string(v.distance) +
           (verdict.augmented_edge ? " after augmentation" : "");
    return std::nullopt;
  }
  return f;
}

Coloring sat_seed(int k, const CycleOptions& options) {
  auto inst = sat::encode_extendable(BaseGraph::cycle(k), 2, 5, options.limits);
  auto result = sat::solve(inst, options.budget);
  if (result.status == sat::SolveStatus::unknown) {
    throw BudgetError("no extendable 5-coloring of S^2_{C_" + std::to_string(k) + "} found within budget");
  }
  if (result.status == sat::SolveStatus::unsat) {
    throw VerificationError("S^2_{C_" + std::to_string(k) + "} has no extendable 5-coloring");
  }
  Coloring f = sat::decode_model(inst, result.model);
  f.c = 5;
  return f;
}

Coloring finish(const BaseGraph& base, Coloring seed, int n, const BuildLimits& limits) {
  SierpGraph s = build_sierpinski(base, 2, limits);
  self_check(s, seed, 5, "cycle coloring");
  check_extendable(s, seed, "cycle coloring");
  if (n == 2) return seed;
  return lift(base, 2, seed, n, limits);
}

// n >= 3 without a liftable dimension-2 seed: liftable SAT seeds of S^2 and
// S^3 (when below n), then a packing 5-coloring of S^n itself.
void sat_for_dimension(const BaseGraph& base, int n, const CycleOptions& options, Construction& out) {
  for (int level = 2; level <= 3 && level < n; ++level) {
    auto inst = sat::encode_liftable(base, level, 5, options.limits);
    auto result = sat::solve(inst, options.budget);
    if (result.status != sat::SolveStatus::sat) {
      out.notes.push_back("liftable 5-coloring of S^" + std::to_string(level) + ": " + sat::to_string(result.status));
      continue;
    }
    Coloring seed = sat::decode_model(inst, result.model);
    seed.c = 5;
    out.coloring = lift(base, level, seed, n, options.limits);
    out.method = "sat-lift";
    out.seed = std::move(seed);
    return;
  }
  SierpGraph s = build_sierpinski(base, n, options.limits);
  auto inst = sat::encode_packing(s, 5);
  auto result = sat::solve(inst, options.budget);
  if (result.status == sat::SolveStatus::unknown) {
    throw BudgetError("no packing 5-coloring of " + s.descriptor() + " found within budget");
  }
  if (result.status == sat::SolveStatus::unsat) throw VerificationError(s.descriptor() + " has no packing 5-coloring");
  out.coloring = sat::decode_model(inst, result.model);
  out.coloring.c = 5;
  self_check(s, out.coloring, 5, "cycle coloring");
  out.method = "sat";
}

}  // namespace

Construction color_cycle(int k, int n, const CycleOptions& options) {
  if (k < 4 || (k >= 5 && k <= 7)) throw PreconditionError("5-colorings of S^n_{C_k} need k >= 4, k not in {5, 6, 7}");
  if (n < 2) throw PreconditionError("cycle colorings need n >= 2");
  BaseGraph base = BaseGraph::cycle(k);
  Construction out;

  if (k % 4 == 0) {
    out.method = "formula";
    if (n == 2) {
      out.coloring = color_cycle_dim2_div4(k);
    } else {
      out.coloring = five_case_coloring(base, n, options.limits);
      self_check(build_sierpinski(base, n, options.limits), out.coloring, 5, "cycle coloring");
    }
    return out;
  }

  std::optional<Coloring> seed;
  if (k % 4 == 2 || k % 4 == 3) {
    std::vector<Convention> firsts;
    if (options.convention) {
      firsts.push_back(*options.convention);
    } else {
      firsts.assign(std::begin(all_conventions), std::end(all_conventions));
    }
    for (Convention c : firsts) {
      std::string note;
      if ((seed = table_coloring(k, c, note))) {
        out.method = "table";
        out.convention = c;
        break;
      }
      out.notes.push_back(note);
    }
  } else if (k == 9 || k == 13) {
    seed = load_cycle_seed(k, options);
    out.method = "seed";
  } else {
    Coloring c13 = load_cycle_seed(13, options);
    Coloring f = block_repetition(c13, k);
    auto verdict = verify_extendable(build_sierpinski(base, 2, options.limits), f);
    if (verdict.valid) {
      seed = std::move(f);
      out.method = "block-repetition";
    } else {
      out.notes.push_back("block repetition of the C_13 seed is not extendable for k = " + std::to_string(k));
    }
  }
  if (seed && n > 2) {
    SierpGraph s = build_sierpinski(base, 2, options.limits);
    if (auto clash = find_self_copy_clash(s, *seed)) {
      out.notes.push_back(out.method + " coloring does not lift: vertex " + s.label(clash->vertex) + " has color " +
                          std::to_string(clash->color) + " but its images in copies " + std::to_string(clash->i) +
                          " and " + std::to_string(clash->j) + " are at distance " + std::to_string(clash->distance));
      seed.reset();
    }
  }
  if (!seed) {
    if (!options.sat_fallback) {
      throw VerificationError("no verified table coloring for k = " + std::to_string(k) + " and SAT fallback is off");
    }
    out.convention.reset();
    if (n > 2) {
      sat_for_dimension(base, n, options, out);
      return out;
    }
    seed = sat_seed(k, options);
    out.method = "sat";
  }
  out.coloring = finish(base, *seed, n, options.limits);
  out.seed = std::move(seed);
  return out;
}

std::vector<std::string> witness_words(Witness which) {
  if (which == Witness::h_prime) return {"11", "12", "13", "14", "20", "21", "22", "23"};
  // With 134 in place of 220 the induced tree only needs 4 colors.
  return {"111", "112", "113", "121", "120", "122", "123", "132", "131", "133", "220",
          "211", "210", "201", "200", "202", "203", "212", "213", "221", "222"};
}

WitnessSubgraph witness_subgraph(Witness which, int k) {
  const int needed = which == Witness::h_prime ? 5 : 4;
  if (k < needed) throw PreconditionError("this witness set needs k >= " + std::to_string(needed));
  const int n = which == Witness::h_prime ? 2 : 3;
  WitnessSubgraph out{build_sierpinski(BaseGraph::path(k), n), {}, {}, Graph()};
  for (const auto& text : witness_words(which)) {
    Word w = Word::parse(text, k);
    out.vertices.push_back(*out.host.find(w));
    out.words.push_back(std::move(w));
  }
  out.induced = out.host.induced(out.vertices);
  return out;
}

}  // namespace sierpack
