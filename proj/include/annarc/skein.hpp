#pragma once

// Kauffman-bracket expansion of words with crossings into flat states.
//
//   t+ = A id + A^-1 E,   t- = A^-1 id + A E,   E = f(n,i); g(n,i)
//
// A trivial loop contributes d = -A^2 - A^-2, a framing twist (-A^3)^shift.
// Essential loops stay formal and are part of the key.

#include <map>
#include <string>
#include <vector>

#include "annarc/matching.hpp"
#include "annarc/tangle.hpp"

namespace annarc {

class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(long long coeff, int power);

  Laurent& operator+=(const Laurent& o);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, long long>& terms() const { return terms_; }
  std::string str() const;

 private:
  std::map<int, long long> terms_;  // power of A -> coefficient, no zeros
};

struct SkeinKey {
  std::vector<FlatState::Link> outer;
  std::vector<FlatState::Link> inner;
  int essential = 0;

  friend bool operator==(const SkeinKey&, const SkeinKey&) = default;
  friend auto operator<=>(const SkeinKey&, const SkeinKey&) = default;
};

using SkeinValue = std::map<SkeinKey, Laurent>;

/// Expands every crossing of w applied to `start` and collects flat states.
SkeinValue bracket(const FlatState& start, const TangleWord& w);

/// The value of a word from arity 0 (source must be 0).
SkeinValue bracket(const TangleWord& w);

}  // namespace annarc
