#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affcrys/path.hpp"
#include "affcrys/wall.hpp"

namespace affcrys {

struct Report {
  explicit Report(std::string s = {}, std::vector<std::pair<std::string, std::string>> p = {})
      : suite(std::move(s)), params(std::move(p)) {}

  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  // The weight identities, also counted in checks/failures.
  std::uint64_t weight_checks = 0;
  std::uint64_t weight_failures = 0;
  std::vector<std::string> counterexamples;  // the first kMaxExamples failures
  std::vector<std::string> notes;

  static constexpr size_t kMaxExamples = 20;
  bool ok() const { return failures == 0; }
  void check(bool good, const std::string& what);
  void fail(const std::string& what) { check(false, what); }
  // Builds the message only on failure.
  template <class Msg>
  void check_lazy(bool good, const Msg& what) {
    if (good)
      ++checks;
    else
      check(false, what());
  }
  void merge(const Report& o);
};

// One (type, level) point of the verification grid.
struct GridPoint {
  AffineType type;
  int level;
};
std::vector<GridPoint> default_grid();

Report verify_axioms(const AffineType& t, int l);
Report verify_perfect(const AffineType& t, int l);
// ψ against the slice operators, plus bijectivity onto the independently
// generated normalized slices.
Report verify_intertwine(const AffineType& t, int l);

// Wall and path BFS to the given depth compared under Φ, with the per-edge
// weight identities.
Report verify_iso(const AffineType& t, const ClassicalWeight& lambda, int depth);

// Random reduced proper walls reached by seeded random f̃/ẽ-words of length
// at most max_len from Y_λ (weights cycled over `weights`).
struct WalkOptions {
  int samples = 1000;
  std::uint64_t seed = 1;
  int max_len = 12;
};
// Acting columns of f̃/ẽ on walls against acting factors on Φ(W).
Report verify_signatures(const AffineType& t, const std::vector<ClassicalWeight>& weights, const WalkOptions& o);
// Every intermediate wall of every word stays reduced proper; weights are
// tracked along the word.
Report verify_closure(const AffineType& t, const std::vector<ClassicalWeight>& weights, const WalkOptions& o);

// Which halving tables satisfy cl(wt) = cwt and wt(f̃_i W) = wt(W) − α_i on
// the depth-bounded wall BFS.
struct HalvingVerdict {
  std::string name;
  HalvingTable table;
  bool ok = false;
  std::string first_failure;
};
std::vector<HalvingVerdict> adjudicate_halving(const AffineType& t, const ClassicalWeight& lambda, int depth);

}  // namespace affcrys
