// Regenerates data/seeds/cycle9.col and cycle13.col: extendable packing
// 5-colorings of S^2_{C_9} and S^2_{C_13} found by the embedded solver.
//
// The C_13 seed is constrained so block repetition applies: copy 4 repeats
// copy 0 and every copy contains 1213 away from its ends. Models whose
// repetitions fail verification up to k = 33 are excluded and the search
// resumes.

#include <fstream>
#include <iostream>

#include "sierpack/constructions.hpp"
#include "sierpack/io.hpp"
#include "sierpack/sat/cnf.hpp"
#include "sierpack/sat/solver.hpp"

using namespace sierpack;

namespace {

constexpr int colors = 5;

void constrain_c13(sat::CnfInstance& inst) {
  const int k = 13;
  auto vertex = [](int i, int p) { return static_cast<VertexId>(i * k + (i + p) % k); };
  for (int p = 0; p < k; ++p) {
    for (int c = 1; c <= colors; ++c) {
      int x = inst.var(vertex(4, p), c);
      int y = inst.var(vertex(0, p), c);
      inst.clauses.add({-x, y});
      inst.clauses.add({x, -y});
    }
  }
  const int block[] = {1, 2, 1, 3};
  for (int i = 0; i < k; ++i) {
    std::vector<int> choices;
    for (int p = 2; p <= 8; ++p) {
      int sel = ++inst.num_vars;
      choices.push_back(sel);
      for (int t = 0; t < 4; ++t) inst.clauses.add({-sel, inst.var(vertex(i, p + t), block[t])});
    }
    inst.clauses.add(choices);
  }
}

bool repeats_well(const Coloring& f) {
  for (int big = 17; big <= 33; big += 4) {
    if (!verify_extendable(build_sierpinski(BaseGraph::cycle(big), 2), block_repetition(f, big)).valid) return false;
  }
  return true;
}

int seed(int k, const std::string& dir) {
  auto inst = sat::encode_extendable(BaseGraph::cycle(k), 2, colors);
  if (k == 13) constrain_c13(inst);
  SierpGraph s = build_sierpinski(BaseGraph::cycle(k), 2);
  for (int round = 1; round <= 500; ++round) {
    auto result = sat::solve(inst.num_vars, inst.clauses);
    if (result.status != sat::SolveStatus::sat) {
      std::cerr << "cycle " << k << ": " << sat::to_string(result.status) << " after " << round << " rounds\n";
      return 1;
    }
    Coloring f = sat::decode_model(inst, result.model);
    f.c = colors;
    if (!verify_extendable(s, f).valid) {
      std::cerr << "cycle " << k << ": decoded coloring is not extendable\n";
      return 1;
    }
    if (k == 13 && !repeats_well(f)) {
      std::vector<int> block;
      for (VertexId v = 0; v < s.num_vertices(); ++v) block.push_back(-inst.var(v, f.colors[v]));
      inst.clauses.add(block);
      continue;
    }
    std::string path = dir + "/cycle" + std::to_string(k) + ".col";
    std::ofstream out(path);
    out << "# Extendable packing 5-coloring of S^2_{C_" << k << "}, found by tools/make_seeds.\n";
    if (k == 13) out << "# Copy 4 repeats copy 0; every copy contains 1213 between offsets 2 and 11.\n";
    write_coloring(out, LabeledGraph::from(s), f);
    std::cout << path << ": round " << round << ", " << result.stats.conflicts << " conflicts\n";
    return 0;
  }
  std::cerr << "cycle " << k << ": gave up\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : SIERPACK_DATA_DIR "/seeds";
  return seed(9, dir) | seed(13, dir);
}
