#pragma once

// Framed affine tangle words: generator tokens, the textual DSL, composition
// and the dual (inverted) word.
//
// Tokens are applied first-to-last, i.e. from the innermost circle of the
// annulus outwards ("bottom to top" in the strip picture). The DSL is
//
//   word := "id(" NAT ")" | gen (";" gen)*
//   gen  := g(n,i) | f(n,i) | t+(n,i) | t-(n,i) | w+(n,i) | w-(n,i) | r(n) | r'(n)
//
// with whitespace ignored everywhere.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace annarc {

enum class GenKind : std::uint8_t {
  Cup,       // g(n,i): n-2 -> n, new arc on strands i, i+1
  Cap,       // f(n,i): n -> n-2, joins strands i, i+1
  CrossPos,  // t+(n,i): strand i passes over strand i+1
  CrossNeg,  // t-(n,i): strand i passes under strand i+1
  TwistPos,  // w+(n,i): positive framing twist of strand i
  TwistNeg,  // w-(n,i)
  RotCCW,    // r(n): counterclockwise shift, strand k -> k-1 (mod n)
  RotCW,     // r'(n): clockwise shift, strand k -> k+1 (mod n)
  Id,
};

struct Generator {
  GenKind kind = GenKind::Id;
  int strands = 0;
  int index = 0;  // 0 for rotations and Id

  static Generator cup(int n, int i) { return {GenKind::Cup, n, i}; }
  static Generator cap(int n, int i) { return {GenKind::Cap, n, i}; }
  static Generator cross(int n, int i, bool positive) {
    return {positive ? GenKind::CrossPos : GenKind::CrossNeg, n, i};
  }
  static Generator twist(int n, int i, bool positive) {
    return {positive ? GenKind::TwistPos : GenKind::TwistNeg, n, i};
  }
  static Generator rot(int n) { return {GenKind::RotCCW, n, 0}; }
  static Generator rot_inv(int n) { return {GenKind::RotCW, n, 0}; }
  static Generator id(int n) { return {GenKind::Id, n, 0}; }

  int source() const;
  int target() const;

  bool is_crossing() const { return kind == GenKind::CrossPos || kind == GenKind::CrossNeg; }
  bool is_twist() const { return kind == GenKind::TwistPos || kind == GenKind::TwistNeg; }
  bool is_rotation() const { return kind == GenKind::RotCCW || kind == GenKind::RotCW; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Throws IndexError when the token's strand count or index is out of range.
void validate(const Generator& g);
bool is_valid(const Generator& g);

std::string to_string(const Generator& g);

/// A composable sequence of generators. Identity tokens are dropped on
/// construction; the empty word is id(m) for its declared arity.
class TangleWord {
 public:
  TangleWord() = default;

  /// Validates every token and the arity chain (IndexError / ArityError).
  explicit TangleWord(std::vector<Generator> tokens);
  TangleWord(int source, std::vector<Generator> tokens);

  static TangleWord identity(int arity);

  const std::vector<Generator>& tokens() const { return tokens_; }
  int source() const { return source_; }
  int target() const { return target_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  bool is_flat() const;
  int crossing_count() const;

  /// Arity at the gap before token `pos` (pos == size() gives the target).
  int arity_at(std::size_t pos) const;

  friend bool operator==(const TangleWord&, const TangleWord&) = default;

 private:
  std::vector<Generator> tokens_;
  int source_ = 0;
  int target_ = 0;
};

/// Parses the DSL. Index n on g/f/t tokens is expanded into the rotation
/// conjugate of index n-1, e.g. g(n,n) = r(n-2); g(n,n-1); r'(n).
TangleWord parse_word(std::string_view text);
std::string format_word(const TangleWord& w);

/// w1 followed by w2; requires w1.target() == w2.source().
TangleWord compose(const TangleWord& w1, const TangleWord& w2);

/// Reversed word with cup<->cap, t+<->t-, w+<->w-, r<->r'. The homological
/// shift that accompanies the adjoint is applied by the Hom-space code.
TangleWord dual(const TangleWord& w);

}  // namespace annarc
