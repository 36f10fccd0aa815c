#pragma once

// Graded Hom spaces between matchings and their composition.
//
// M_alpha^beta is the tensor product of one two-dimensional space per loop
// of dual(alpha) o beta: A = <1, X> (degrees -1, +1) for a trivial loop,
// A0 = <V, W> (degree 0) for an essential one, shifted by n. Factors follow
// the loops in order of their smallest marked point.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annarc/geometry.hpp"
#include "annarc/matching.hpp"
#include "annarc/rational.hpp"

namespace annarc {

enum class Label : std::uint8_t { One, X, V, W };

int label_degree(Label l);
LoopClass label_class(Label l);
std::string label_name(Label l);

using Tensor = std::vector<Label>;
using Combination = std::map<Tensor, Rational>;

/// "1⊗X⊗V"; the empty tensor is "()".
std::string format_tensor(const Tensor& t);
/// Accepts "⊗" or "*" between factors. Throws SyntaxError.
Tensor parse_tensor(std::string_view text);

class HomSpace {
 public:
  HomSpace(AffineMatching alpha, AffineMatching beta);

  int n() const { return alpha_.n(); }
  const AffineMatching& alpha() const { return alpha_; }
  const AffineMatching& beta() const { return beta_; }
  const std::vector<LoopClass>& loops() const { return classes_; }
  /// Marked points (1-based) on each loop, in factor order.
  const std::vector<std::vector<int>>& loop_points() const { return points_; }
  /// Piece ids of each loop in the picture embed_pair(alpha, beta).
  const std::vector<std::vector<int>>& loop_pieces() const { return pieces_; }
  int n0() const;
  int n1() const;
  int shift() const { return n(); }

  bool admits(const Tensor& t) const;
  int degree(const Tensor& t) const;  // Hom-degree
  std::vector<Tensor> basis() const;
  std::map<int, int> dims() const;

  friend bool operator==(const HomSpace& a, const HomSpace& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  AffineMatching alpha_;
  AffineMatching beta_;
  std::vector<LoopClass> classes_;
  std::vector<std::vector<int>> points_;
  std::vector<std::vector<int>> pieces_;
};

class HomElement {
 public:
  explicit HomElement(HomSpace space) : space_(std::move(space)) {}
  /// Throws LabelClassMismatch when t does not fit the space.
  HomElement(HomSpace space, const Tensor& t, Rational coeff = 1);

  const HomSpace& space() const { return space_; }
  const Combination& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Tensor& t, const Rational& c);
  HomElement& operator+=(const HomElement& o);
  friend HomElement operator*(const Rational& c, const HomElement& x);
  friend bool operator==(const HomElement& a, const HomElement& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  /// "1⊗X - 2 V⊗W", "0" for the zero element.
  std::string str() const;

 private:
  HomSpace space_;
  Combination terms_;
};

enum class StructureMap { MSep, MNest, DeltaSep, DeltaNest, Act, Coact, Pair, Copair, Iota };

std::string map_name(StructureMap m);

/// Coaction A0 -> A ⊗ A0: "* -> 1⊗*" (default) or the degree-homogeneous "* -> X⊗*".
enum class Coaction { Paper, Homogeneous };

/// Image of one basis tensor. Two-factor inputs and outputs put the outer
/// loop first for Pair/Copair, the inner loop second for MNest/DeltaNest and
/// the trivial loop first for Act/Coact. Throws LabelClassMismatch.
Combination apply_map(StructureMap m, const Tensor& in, Coaction coaction = Coaction::Paper);
Combination apply_map(StructureMap m, const Combination& in, Coaction coaction = Coaction::Paper);

struct ComposeOptions {
  Coaction coaction = Coaction::Paper;
  /// Plus ends of the middle arcs in surgery order; empty means default_order.
  std::vector<int> order;
};

/// Surgery order used by default: at each step the available middle arc
/// (nothing left around it) with the smallest plus end.
std::vector<int> default_order(const AffineMatching& beta);
/// Every admissible ordering of the middle arcs.
std::vector<std::vector<int>> all_orders(const AffineMatching& beta);

/// One surgery step of a composition.
struct PlanStep {
  SurgeryEvent event;
  StructureMap map;
};
std::vector<PlanStep> compose_steps(const AffineMatching& alpha, const AffineMatching& beta,
                                    const AffineMatching& gamma, const std::vector<int>& order = {});

/// x in M_alpha^beta, y in M_beta^gamma; the result lies in M_alpha^gamma.
/// Throws MiddleMismatch when x's target differs from y's source.
HomElement compose(const HomElement& x, const HomElement& y, const ComposeOptions& opt = {});

/// One^{⊗n} in M_alpha^alpha.
HomElement identity(const AffineMatching& alpha);

/// Hom-degree, or nullopt for zero and mixed-degree elements.
std::optional<int> degree(const HomElement& x);

/// Image of x under one step of rotation applied to both matchings.
HomElement rotate(const HomElement& x);

}  // namespace annarc
