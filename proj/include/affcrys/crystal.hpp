#pragma once

#include <memory>
#include <string>
#include <vector>

#include "affcrys/coord.hpp"
#include "affcrys/slice.hpp"

namespace affcrys {

// B^(l) with all operators tabulated. Element ids follow the canonical order.
class PerfectCrystal {
 public:
  static constexpr int kNull = -1;

  PerfectCrystal(const AffineType& t, int l);

  const AffineType& type() const { return type_; }
  int level() const { return level_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const CoordElement& element(int id) const { return elems_[id]; }
  int index(const CoordElement& b) const;  // kNull if absent

  int f(int i, int id) const { return f_[i][id]; }
  int e(int i, int id) const { return e_[i][id]; }
  int eps(int i, int id) const { return eps_[i][id]; }
  int phi(int i, int id) const { return phi_[i][id]; }
  ClassicalWeight eps_weight(int id) const;
  ClassicalWeight phi_weight(int id) const;
  ClassicalWeight cwt(int id) const;

  // The unique b with φ(b) = λ (resp. ε(b) = λ); throws if absent or not unique.
  int b_lower(const ClassicalWeight& lambda) const;
  int b_upper(const ClassicalWeight& lambda) const;

 private:
  AffineType type_;
  int level_;
  std::vector<CoordElement> elems_;
  std::vector<std::vector<int>> f_, e_, eps_, phi_;
};

std::shared_ptr<const PerfectCrystal> perfect_crystal(const AffineType& t, int l);

// Element-level conveniences; std::nullopt is the null symbol 0.
std::optional<CoordElement> f_coord(const AffineType& t, int l, int i, const CoordElement& b);
std::optional<CoordElement> e_coord(const AffineType& t, int l, int i, const CoordElement& b);
int eps_coord(const AffineType& t, int l, int i, const CoordElement& b);
int phi_coord(const AffineType& t, int l, int i, const CoordElement& b);
ClassicalWeight cwt_coord(const AffineType& t, int l, const CoordElement& b);
CoordElement find_b_lambda(const AffineType& t, int l, const ClassicalWeight& lambda);
CoordElement find_b_upper(const AffineType& t, int l, const ClassicalWeight& lambda);

// Ground-state sequence b_k = b_{λ_k}, λ_0 = λ, λ_{k+1} = ε(b_k); element ids
// into perfect_crystal(t, l). It becomes periodic after `pre` steps.
struct GroundState {
  AffineType type;
  int level = 0;
  ClassicalWeight lambda;
  std::shared_ptr<const PerfectCrystal> crystal;
  std::vector<int> seq;  // b_0 .. b_{pre+period-1}
  int pre = 0, period = 1;

  int at(std::int64_t k) const {
    if (k < pre) return seq[k];
    return seq[pre + (k - pre) % period];
  }
  const CoordElement& element(std::int64_t k) const { return crystal->element(at(k)); }
};
// Throws std::invalid_argument unless λ is dominant of positive level.
GroundState ground_state(const AffineType& t, const ClassicalWeight& lambda);

struct PerfectReport {
  bool connected = false;
  bool level_bound = false;     // <c, ε(b)> >= l for all b
  bool extremal_unique = false; // b^λ and b_λ exist and are unique
  bool weight_cone = false;
  std::vector<std::string> violations;
  bool ok() const { return connected && level_bound && extremal_unique && weight_cone; }
};
PerfectReport check_perfect(const AffineType& t, int l);

// The seven crystal axioms on the tabulated crystal; one message per violation.
std::vector<std::string> check_axioms(const PerfectCrystal& B);

}  // namespace affcrys
