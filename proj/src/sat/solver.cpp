#include "sierpack/sat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string_view>

#include "sierpack/errors.hpp"

namespace sierpack::sat {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::sat:
      return "sat";
    case SolveStatus::unsat:
      return "unsat";
    case SolveStatus::unknown:
      break;
  }
  return "unknown";
}

SolveBudget SolveBudget::from_env(SolveBudget fallback) {
  if (const char* env = std::getenv("SIERPACK_CONFLICT_BUDGET")) {
    std::int64_t value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size()) fallback.max_conflicts = value;
  }
  if (const char* env = std::getenv("SIERPACK_TIME_BUDGET")) {
    char* end = nullptr;
    double value = std::strtod(env, &end);
    if (end != env && *end == '\0') fallback.max_seconds = value;
  }
  return fallback;
}

namespace {

// Literal encoding: 2 * var + sign, var 0-based, sign 1 = negated.
using Lit = std::uint32_t;
constexpr Lit kNoLit = std::numeric_limits<Lit>::max();
inline Lit make_lit(int dimacs) {
  return dimacs > 0 ? static_cast<Lit>(2 * (dimacs - 1)) : static_cast<Lit>(2 * (-dimacs - 1) + 1);
}
inline Lit neg(Lit l) { return l ^ 1u; }
inline std::uint32_t var_of(Lit l) { return l >> 1; }

// Reason encoding: clause reference, or a binary clause tagged with the
// high bit whose low bits hold the other (false) literal.
using Reason = std::uint32_t;
constexpr Reason kNoReason = std::numeric_limits<Reason>::max();
constexpr Reason kBinaryTag = 0x80000000u;

// Clause arena layout: [size][flags][activity][lits...].
// flags: bit 0 learnt, bit 1 deleted, bits 2.. lbd.
constexpr std::uint32_t kHeader = 3;

struct Watcher {
  std::uint32_t cref;
  Lit blocker;
};

class Cdcl {
 public:
  Cdcl(int num_vars, const SolveBudget& budget)
      : n_(static_cast<std::uint32_t>(num_vars)),
        budget_(budget),
        vals_(2 * n_, 0),
        level_(n_, 0),
        reason_(n_, kNoReason),
        trail_pos_(n_, 0),
        polarity_(n_, 1),
        activity_(n_, 0.0),
        seen_(n_, 0),
        heap_index_(n_, -1),
        watches_(2 * n_),
        binaries_(2 * n_) {
    trail_.reserve(n_);
    for (std::uint32_t v = 0; v < n_; ++v) heap_insert(v);
  }

  bool add_clause(std::span<const int> dimacs);
  SolveStatus run();
  std::vector<bool> model() const;
  const SolveStats& stats() const { return stats_; }

 private:
  // --- assignment -------------------------------------------------------
  std::int8_t value(Lit l) const { return vals_[l]; }
  std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }
  void assign(Lit l, Reason r) {
    std::uint32_t v = var_of(l);
    vals_[l] = 1;
    vals_[neg(l)] = -1;
    level_[v] = decision_level();
    reason_[v] = r;
    trail_pos_[v] = static_cast<std::uint32_t>(trail_.size());
    trail_.push_back(l);
  }
  void backtrack(std::uint32_t level);

  // --- clauses ----------------------------------------------------------
  std::uint32_t& csize(std::uint32_t c) { return arena_[c]; }
  std::uint32_t csize(std::uint32_t c) const { return arena_[c]; }
  std::uint32_t& cflags(std::uint32_t c) { return arena_[c + 1]; }
  bool learnt(std::uint32_t c) const { return arena_[c + 1] & 1u; }
  bool deleted(std::uint32_t c) const { return arena_[c + 1] & 2u; }
  std::uint32_t lbd(std::uint32_t c) const { return arena_[c + 1] >> 2; }
  void set_lbd(std::uint32_t c, std::uint32_t v) { arena_[c + 1] = (arena_[c + 1] & 3u) | (v << 2); }
  float& cactivity(std::uint32_t c) { return *reinterpret_cast<float*>(&arena_[c + 2]); }
  Lit* lits(std::uint32_t c) { return &arena_[c + kHeader]; }
  const Lit* lits(std::uint32_t c) const { return &arena_[c + kHeader]; }
  std::uint32_t alloc_clause(std::span<const Lit> ls, bool is_learnt);
  void attach(std::uint32_t c) {
    watches_[neg(lits(c)[0])].push_back({c, lits(c)[1]});
    watches_[neg(lits(c)[1])].push_back({c, lits(c)[0]});
  }
  bool locked(std::uint32_t c) const {
    Lit first = lits(c)[0];
    return vals_[first] == 1 && reason_[var_of(first)] == c;
  }

  // --- search -----------------------------------------------------------
  bool propagate();  // false on conflict, conflict_ filled
  void analyze(std::vector<Lit>& learnt_out, std::uint32_t& backjump, std::uint32_t& lbd_out);
  bool redundant(Lit p, std::uint32_t abstract_levels);
  std::uint32_t compute_lbd(std::span<const Lit> ls);
  void reduce_db();
  void collect_garbage();
  Lit pick_branch();
  bool out_of_budget();

  // --- heuristics -------------------------------------------------------
  void bump_var(std::uint32_t v);
  void bump_clause(std::uint32_t c);
  void heap_insert(std::uint32_t v);
  void heap_up(int i);
  void heap_down(int i);
  std::uint32_t heap_pop();
  bool heap_less(std::uint32_t a, std::uint32_t b) const { return activity_[a] > activity_[b]; }

  std::uint32_t n_;
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  std::vector<std::int8_t> vals_;
  std::vector<std::uint32_t> level_;
  std::vector<Reason> reason_;
  std::vector<std::uint32_t> trail_pos_;
  std::vector<std::uint8_t> polarity_;  // 1 = assign negative
  std::vector<double> activity_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> heap_index_;
  std::vector<std::uint32_t> heap_;

  std::vector<Lit> trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<std::uint32_t> arena_;
  std::size_t wasted_ = 0;
  std::vector<std::uint32_t> originals_;
  std::vector<std::uint32_t> learnts_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::vector<Lit>> binaries_;  // binaries_[p]: literals implied when p is true

  // conflict as explicit literal list (all false)
  std::vector<Lit> conflict_;
  std::uint32_t conflict_cref_ = kNoReason;

  double var_inc_ = 1.0;
  double var_decay_ = 0.8;
  double clause_inc_ = 1.0;
  std::uint64_t next_reduce_ = 2000;
  std::uint64_t reduce_count_ = 0;
  bool unsat_at_root_ = false;

  // Glucose-style restart state: fast and slow moving averages of LBD.
  double lbd_fast_ = 0.0;
  double lbd_slow_ = 0.0;
  std::uint64_t conflicts_since_restart_ = 0;
  double trail_avg_ = 0.0;

  std::vector<std::uint32_t> level_stamp_;
  std::uint32_t stamp_ = 0;
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_clear_;

  SolveStats stats_;
};

std::uint32_t Cdcl::alloc_clause(std::span<const Lit> ls, bool is_learnt) {
  auto c = static_cast<std::uint32_t>(arena_.size());
  if (arena_.size() + kHeader + ls.size() >= kBinaryTag) throw Error("clause arena exhausted");
  arena_.push_back(static_cast<std::uint32_t>(ls.size()));
  arena_.push_back(is_learnt ? 1u : 0u);
  arena_.push_back(0u);
  arena_.insert(arena_.end(), ls.begin(), ls.end());
  cactivity(c) = 0.0f;
  return c;
}

bool Cdcl::add_clause(std::span<const int> dimacs) {
  if (unsat_at_root_) return false;
  std::vector<Lit> ls;
  ls.reserve(dimacs.size());
  for (int d : dimacs) {
    if (d == 0 || static_cast<std::uint32_t>(std::abs(d)) > n_) throw PreconditionError("literal out of range");
    ls.push_back(make_lit(d));
  }
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    if (ls[i + 1] == neg(ls[i])) return true;  // tautology
  // drop literals false at root, skip satisfied clauses
  std::size_t j = 0;
  for (Lit l : ls) {
    if (value(l) == 1) return true;
    if (value(l) == 0) ls[j++] = l;
  }
  ls.resize(j);
  if (ls.empty()) {
    unsat_at_root_ = true;
    return false;
  }
  if (ls.size() == 1) {
    assign(ls[0], kNoReason);
    if (!propagate()) unsat_at_root_ = true;
    return !unsat_at_root_;
  }
  if (ls.size() == 2) {
    binaries_[neg(ls[0])].push_back(ls[1]);
    binaries_[neg(ls[1])].push_back(ls[0]);
    return true;
  }
  std::uint32_t c = alloc_clause(ls, false);
  originals_.push_back(c);
  attach(c);
  return true;
}

void Cdcl::backtrack(std::uint32_t level) {
  if (decision_level() <= level) return;
  for (std::size_t i = trail_.size(); i-- > trail_lim_[level];) {
    Lit l = trail_[i];
    std::uint32_t v = var_of(l);
    vals_[l] = 0;
    vals_[neg(l)] = 0;
    reason_[v] = kNoReason;
    polarity_[v] = static_cast<std::uint8_t>(l & 1u);
    if (heap_index_[v] < 0) heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

bool Cdcl::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    ++stats_.propagations;
    // binary implications of p
    for (Lit q : binaries_[p]) {
      std::int8_t vq = value(q);
      if (vq == 1) continue;
      if (vq == -1) {
        conflict_.assign({q, neg(p)});
        conflict_cref_ = kNoReason;
        return false;
      }
      assign(q, kBinaryTag | neg(p));
    }
    // long clauses watching -p
    std::vector<Watcher>& ws = watches_[p];
    const Lit false_lit = neg(p);
    std::size_t i = 0, j = 0;
    const std::size_t end = ws.size();
    while (i < end) {
      Watcher w = ws[i];
      if (value(w.blocker) == 1) {
        ws[j++] = ws[i++];
        continue;
      }
      std::uint32_t c = w.cref;
      Lit* cl = lits(c);
      if (cl[0] == false_lit) std::swap(cl[0], cl[1]);
      ++i;
      Lit first = cl[0];
      if (first != w.blocker && value(first) == 1) {
        ws[j++] = {c, first};
        continue;
      }
      const std::uint32_t sz = csize(c);
      bool moved = false;
      for (std::uint32_t k = 2; k < sz; ++k) {
        if (value(cl[k]) != -1) {
          std::swap(cl[1], cl[k]);
          watches_[neg(cl[1])].push_back({c, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {c, first};
      if (value(first) == -1) {
        conflict_cref_ = c;
        conflict_.assign(cl, cl + sz);
        while (i < end) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return false;
      }
      assign(first, c);
    }
    ws.resize(j);
  }
  return true;
}

std::uint32_t Cdcl::compute_lbd(std::span<const Lit> ls) {
  if (level_stamp_.size() <= decision_level() + 1) level_stamp_.resize(decision_level() + 2, 0);
  ++stamp_;
  std::uint32_t count = 0;
  for (Lit l : ls) {
    std::uint32_t lv = level_[var_of(l)];
    if (level_stamp_[lv] != stamp_) {
      level_stamp_[lv] = stamp_;
      ++count;
    }
  }
  return count;
}

bool Cdcl::redundant(Lit p, std::uint32_t abstract_levels) {
  analyze_stack_.clear();
  analyze_stack_.push_back(p);
  const std::size_t top = analyze_clear_.size();
  while (!analyze_stack_.empty()) {
    Lit q = analyze_stack_.back();
    analyze_stack_.pop_back();
    Reason r = reason_[var_of(q)];
    auto visit = [&](Lit l) {
      std::uint32_t v = var_of(l);
      if (seen_[v] || level_[v] == 0) return true;
      if (reason_[v] != kNoReason && ((1u << (level_[v] & 31u)) & abstract_levels)) {
        seen_[v] = 1;
        analyze_stack_.push_back(l);
        analyze_clear_.push_back(l);
        return true;
      }
      for (std::size_t k = top; k < analyze_clear_.size(); ++k) seen_[var_of(analyze_clear_[k])] = 0;
      analyze_clear_.resize(top);
      return false;
    };
    if (r & kBinaryTag) {
      if (!visit(r & ~kBinaryTag)) return false;
    } else {
      const Lit* cl = lits(r);
      for (std::uint32_t k = 1; k < csize(r); ++k)
        if (!visit(cl[k])) return false;
    }
  }
  return true;
}

void Cdcl::analyze(std::vector<Lit>& out, std::uint32_t& backjump, std::uint32_t& lbd_out) {
  out.clear();
  out.push_back(kNoLit);
  int path = 0;
  Lit p = kNoLit;
  std::size_t index = trail_.size();
  std::vector<Lit> reason_lits = conflict_;
  std::uint32_t reason_cref = conflict_cref_;

  for (;;) {
    if (reason_cref != kNoReason && learnt(reason_cref)) bump_clause(reason_cref);
    for (Lit q : reason_lits) {
      if (q == p) continue;
      std::uint32_t v = var_of(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump_var(v);
      if (level_[v] >= decision_level()) {
        ++path;
      } else {
        out.push_back(q);
      }
    }
    do {
      --index;
    } while (!seen_[var_of(trail_[index])]);
    p = trail_[index];
    std::uint32_t v = var_of(p);
    seen_[v] = 0;
    if (--path == 0) break;
    Reason r = reason_[v];
    if (r & kBinaryTag) {
      reason_lits.assign({p, r & ~kBinaryTag});
      reason_cref = kNoReason;
    } else {
      reason_lits.assign(lits(r), lits(r) + csize(r));
      reason_cref = r;
    }
  }
  out[0] = neg(p);

  // recursive minimization
  analyze_clear_.assign(out.begin() + 1, out.end());
  std::uint32_t abstract_levels = 0;
  for (std::size_t k = 1; k < out.size(); ++k) abstract_levels |= 1u << (level_[var_of(out[k])] & 31u);
  std::size_t j = 1;
  for (std::size_t k = 1; k < out.size(); ++k) {
    std::uint32_t v = var_of(out[k]);
    if (reason_[v] == kNoReason || !redundant(out[k], abstract_levels)) out[j++] = out[k];
  }
  out.resize(j);
  for (Lit l : analyze_clear_) seen_[var_of(l)] = 0;
  for (Lit l : out) seen_[var_of(l)] = 0;

  backjump = 0;
  if (out.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < out.size(); ++k)
      if (level_[var_of(out[k])] > level_[var_of(out[max_i])]) max_i = k;
    std::swap(out[1], out[max_i]);
    backjump = level_[var_of(out[1])];
  }
  lbd_out = compute_lbd(out);
}

void Cdcl::bump_var(std::uint32_t v) {
  if ((activity_[v] += var_inc_) > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_index_[v] >= 0) heap_up(heap_index_[v]);
}

void Cdcl::bump_clause(std::uint32_t c) {
  if ((cactivity(c) += static_cast<float>(clause_inc_)) > 1e20f) {
    for (std::uint32_t l : learnts_) cactivity(l) *= 1e-20f;
    clause_inc_ *= 1e-20;
  }
}

void Cdcl::heap_insert(std::uint32_t v) {
  heap_index_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_index_[v]);
}

void Cdcl::heap_up(int i) {
  std::uint32_t v = heap_[static_cast<std::size_t>(i)];
  while (i > 0) {
    int parent = (i - 1) / 2;
    std::uint32_t pv = heap_[static_cast<std::size_t>(parent)];
    // ties broken by lower variable index for determinism
    if (!(heap_less(v, pv) || (activity_[v] == activity_[pv] && v < pv))) break;
    heap_[static_cast<std::size_t>(i)] = pv;
    heap_index_[pv] = i;
    i = parent;
  }
  heap_[static_cast<std::size_t>(i)] = v;
  heap_index_[v] = i;
}

void Cdcl::heap_down(int i) {
  std::uint32_t v = heap_[static_cast<std::size_t>(i)];
  const int size = static_cast<int>(heap_.size());
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    return heap_less(a, b) || (activity_[a] == activity_[b] && a < b);
  };
  for (;;) {
    int child = 2 * i + 1;
    if (child >= size) break;
    if (child + 1 < size && better(heap_[static_cast<std::size_t>(child + 1)], heap_[static_cast<std::size_t>(child)])) ++child;
    std::uint32_t cv = heap_[static_cast<std::size_t>(child)];
    if (!better(cv, v)) break;
    heap_[static_cast<std::size_t>(i)] = cv;
    heap_index_[cv] = i;
    i = child;
  }
  heap_[static_cast<std::size_t>(i)] = v;
  heap_index_[v] = i;
}

std::uint32_t Cdcl::heap_pop() {
  std::uint32_t top = heap_.front();
  std::uint32_t last = heap_.back();
  heap_.pop_back();
  heap_index_[top] = -1;
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_index_[last] = 0;
    heap_down(0);
  }
  return top;
}

Lit Cdcl::pick_branch() {
  while (!heap_.empty()) {
    std::uint32_t v = heap_pop();
    if (vals_[2 * v] == 0) return 2 * v + polarity_[v];
  }
  return kNoLit;
}

void Cdcl::reduce_db() {
  ++reduce_count_;
  std::sort(learnts_.begin(), learnts_.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (lbd(a) != lbd(b)) return lbd(a) > lbd(b);
    if (cactivity(a) != cactivity(b)) return cactivity(a) < cactivity(b);
    return a < b;
  });
  const std::size_t target = learnts_.size() / 2;
  std::size_t removed = 0, j = 0;
  for (std::size_t i = 0; i < learnts_.size(); ++i) {
    std::uint32_t c = learnts_[i];
    if (removed < target && lbd(c) > 2 && !locked(c)) {
      cflags(c) |= 2u;
      wasted_ += kHeader + csize(c);
      ++removed;
    } else {
      learnts_[j++] = c;
    }
  }
  learnts_.resize(j);
  for (auto& ws : watches_) {
    ws.erase(std::remove_if(ws.begin(), ws.end(), [&](const Watcher& w) { return deleted(w.cref); }), ws.end());
  }
  if (wasted_ * 4 > arena_.size()) collect_garbage();
}

void Cdcl::collect_garbage() {
  std::vector<std::uint32_t> fresh;
  fresh.reserve(arena_.size() - wasted_);
  auto move = [&](std::uint32_t c) {
    auto to = static_cast<std::uint32_t>(fresh.size());
    fresh.insert(fresh.end(), arena_.begin() + c, arena_.begin() + c + kHeader + csize(c));
    arena_[c + 2] = to;  // forwarding address
    return to;
  };
  for (auto& c : originals_) c = move(c);
  // locked clauses are never deleted, so every reason gets a forwarding address
  std::vector<std::uint32_t> forwarded_learnts;
  forwarded_learnts.reserve(learnts_.size());
  for (auto c : learnts_) forwarded_learnts.push_back(move(c));
  for (Lit l : trail_) {
    std::uint32_t v = var_of(l);
    Reason r = reason_[v];
    if (r == kNoReason || (r & kBinaryTag)) continue;
    reason_[v] = arena_[r + 2];
  }
  learnts_ = std::move(forwarded_learnts);
  arena_ = std::move(fresh);
  wasted_ = 0;
  for (auto& ws : watches_) ws.clear();
  for (auto c : originals_) attach(c);
  for (auto c : learnts_) attach(c);
}

bool Cdcl::out_of_budget() {
  if (budget_.max_conflicts >= 0 && static_cast<std::int64_t>(stats_.conflicts) >= budget_.max_conflicts) return true;
  if (budget_.max_seconds >= 0 && (stats_.conflicts & 63u) == 0) {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed >= budget_.max_seconds) return true;
  }
  return false;
}

SolveStatus Cdcl::run() {
  if (unsat_at_root_) return SolveStatus::unsat;
  if (!propagate()) return SolveStatus::unsat;
  std::vector<Lit> learnt;
  for (;;) {
    if (!propagate()) {
      ++stats_.conflicts;
      ++conflicts_since_restart_;
      if (decision_level() == 0) return SolveStatus::unsat;
      std::uint32_t backjump = 0, glue = 0;
      analyze(learnt, backjump, glue);
      backtrack(backjump);
      if (learnt.size() == 1) {
        assign(learnt[0], kNoReason);
      } else if (learnt.size() == 2) {
        binaries_[neg(learnt[0])].push_back(learnt[1]);
        binaries_[neg(learnt[1])].push_back(learnt[0]);
        assign(learnt[0], kBinaryTag | learnt[1]);
      } else {
        std::uint32_t c = alloc_clause(learnt, true);
        set_lbd(c, glue);
        learnts_.push_back(c);
        attach(c);
        bump_clause(c);
        assign(learnt[0], c);
      }
      var_decay_ = std::min(0.95, var_decay_ + ((stats_.conflicts % 5000) == 0 ? 0.01 : 0.0));
      var_inc_ /= var_decay_;
      clause_inc_ /= 0.999;

      lbd_fast_ += (static_cast<double>(glue) - lbd_fast_) / 32.0;
      lbd_slow_ += (static_cast<double>(glue) - lbd_slow_) / (stats_.conflicts < 5000 ? static_cast<double>(stats_.conflicts) : 5000.0);
      trail_avg_ += (static_cast<double>(trail_.size()) - trail_avg_) / 5000.0;
      // block restarts when the trail is unusually long (likely near a model)
      if (stats_.conflicts > 10000 && conflicts_since_restart_ > 50 && trail_.size() > 1.4 * trail_avg_) {
        conflicts_since_restart_ = 0;
      }
      if (out_of_budget()) return SolveStatus::unknown;
      continue;
    }

    if (conflicts_since_restart_ >= 50 && lbd_fast_ * 0.8 > lbd_slow_) {
      ++stats_.restarts;
      conflicts_since_restart_ = 0;
      lbd_fast_ = lbd_slow_;
      backtrack(0);
    }
    if (stats_.conflicts >= next_reduce_) {
      next_reduce_ = stats_.conflicts + 2000 + 300 * (reduce_count_ + 1);
      reduce_db();
    }

    Lit next = pick_branch();
    if (next == kNoLit) return SolveStatus::sat;
    ++stats_.decisions;
    trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
    assign(next, kNoReason);
  }
}

std::vector<bool> Cdcl::model() const {
  std::vector<bool> m(n_ + 1, false);
  for (std::uint32_t v = 0; v < n_; ++v) m[v + 1] = vals_[2 * v] == 1;
  return m;
}

}  // namespace

SolveResult solve(int num_vars, const ClauseList& clauses, const SolveBudget& budget) {
  auto start = std::chrono::steady_clock::now();
  SolveResult result;
  Cdcl solver(num_vars, budget);
  bool ok = true;
  for (std::size_t c = 0; c < clauses.size() && ok; ++c) ok = solver.add_clause(clauses[c]);
  result.status = ok ? solver.run() : SolveStatus::unsat;
  result.stats = solver.stats();
  if (result.status == SolveStatus::sat) {
    result.model = solver.model();
    if (!satisfies(clauses, result.model)) throw Error("solver produced a non-model; internal error");
  }
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace sierpack::sat
