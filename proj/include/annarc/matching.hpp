#pragma once

// Affine crossingless matchings and the combinatorial evaluation of flat
// words.
//
// Points on a circle are numbered 1..m clockwise; the seam is a ray between
// point m and point 1. Crossing the seam while moving towards increasing
// indices (from m to 1) counts +1. An arc (plus, minus, s) is drawn from its
// plus end clockwise to its minus end, so s = 1 exactly when it wraps past
// the seam.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "annarc/tangle.hpp"

namespace annarc {

struct Arc {
  int plus = 0;
  int minus = 0;
  int seam = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class AffineMatching {
 public:
  AffineMatching() = default;

  /// Validates the arc set: perfect matching of 1..2n, canonical seam data,
  /// pairwise nested-or-disjoint clockwise intervals.
  static AffineMatching from_arcs(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  int points() const { return 2 * n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted by plus

  int partner(int p) const { return partner_.at(p - 1); }
  /// Seam count of the arc at p traversed from p to its partner.
  int seam_from(int p) const { return seam_.at(p - 1); }
  bool is_plus(int p) const { return plus_.at(p - 1); }
  const Arc& arc_at(int p) const;

  friend bool operator==(const AffineMatching& a, const AffineMatching& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }
  friend auto operator<=>(const AffineMatching& a, const AffineMatching& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.arcs_ <=> b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> partner_;
  std::vector<int> seam_;
  std::vector<bool> plus_;
};

bool is_balanced(std::string_view signs);

/// Each plus is joined to the first minus reached clockwise with as many
/// pluses as minuses in between. Throws UnbalancedSequence.
AffineMatching from_signs(std::string_view signs);
std::string to_signs(const AffineMatching& m);

/// All binom(2n,n) matchings, ordered by sign string ('+' < '-').
std::vector<AffineMatching> enumerate(int n);

/// Canonical cup/rotation word w with evaluate_word(w).matching == m.
TangleWord matching_word(const AffineMatching& m);

/// beta's word followed by the dual of alpha's word: the closed link whose
/// loops index Hom(alpha, beta).
TangleWord closure_word(const AffineMatching& alpha, const AffineMatching& beta);

struct EvaluationResult {
  AffineMatching matching;
  int n0 = 0;
  int n1 = 0;
  int shift = 0;

  friend bool operator==(const EvaluationResult&, const EvaluationResult&) = default;
};

/// Connectivity of a flat (s, m) tangle: every endpoint on the inner circle
/// (s points) and outer circle (m points) is linked to one other endpoint,
/// with the seam count of the connecting strand.
class FlatState {
 public:
  struct End {
    bool inner = false;
    int index = 0;  // 0-based

    friend bool operator==(const End&, const End&) = default;
    friend auto operator<=>(const End&, const End&) = default;
  };
  struct Link {
    End to;
    int seam = 0;  // traversed from the owning endpoint towards `to`

    friend bool operator==(const Link&, const Link&) = default;
    friend auto operator<=>(const Link&, const Link&) = default;
  };

  FlatState() = default;
  /// The identity tangle on `source` strands.
  explicit FlatState(int source);
  /// The (0, 2n) tangle of a matching.
  explicit FlatState(const AffineMatching& m);

  int source() const { return static_cast<int>(inner_.size()); }
  int arity() const { return static_cast<int>(outer_.size()); }
  const std::vector<Link>& outer() const { return outer_; }
  const std::vector<Link>& inner() const { return inner_; }
  int n0() const { return n0_; }
  int n1() const { return n1_; }
  int shift() const { return shift_; }

  /// Throws FlatnessError on crossings and ArityError on a strand mismatch.
  void apply(const Generator& g);
  void apply(const TangleWord& w);

  /// Requires source 0.
  AffineMatching matching() const;

  /// Everything except the loop counts and the shift.
  bool same_connectivity(const FlatState& o) const {
    return outer_ == o.outer_ && inner_ == o.inner_;
  }

  friend bool operator==(const FlatState&, const FlatState&) = default;
  friend auto operator<=>(const FlatState&, const FlatState&) = default;

 private:
  Link& link(End e) { return e.inner ? inner_[e.index] : outer_[e.index]; }
  void cup(int i);
  void cap(int i);
  void rotate(bool ccw);

  std::vector<Link> outer_;
  std::vector<Link> inner_;
  int n0_ = 0;
  int n1_ = 0;
  int shift_ = 0;
};

/// Applies one flat generator to a (0, 2n) state. An empty optional-like
/// matching with n = 0 stands for the empty diagram.
EvaluationResult act_generator(const AffineMatching& m, const Generator& g);

/// Requires source arity 0, even arities throughout and no crossings.
EvaluationResult evaluate_word(const TangleWord& w);

}  // namespace annarc
