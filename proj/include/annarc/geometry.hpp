#pragma once

// Exact piecewise-linear pictures of flat diagrams in the punctured plane.
//
// Circles are "diamonds" |x| + |y| = rho; the point at angular fraction
// theta (clockwise from the top) is rho * P(theta) with P piecewise linear,
// so every vertex has rational coordinates. The seam is the ray from the
// origin straight up.

#include <optional>
#include <string>
#include <vector>

#include "annarc/matching.hpp"
#include "annarc/rational.hpp"
#include "annarc/tangle.hpp"

namespace annarc {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// rho * P(theta); theta may lie outside [0, 1).
Point on_circle(const Rational& rho, const Rational& theta);

/// A polyline between two nodes (marked points on layer boundaries).
struct Piece {
  int id = 0;
  int layer = 0;
  int from = 0;
  int to = 0;
  std::vector<Point> path;
};

/// A cap-cup pair that surgery can replace by two through strands.
/// For word pictures `layer` is the position of the cap token and `index`
/// its strand index; for composites `layer` is kMiddleLayer and `index` the
/// plus end of the middle arc.
struct Site {
  int layer = 0;
  int index = 0;

  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};

inline constexpr int kMiddleLayer = 1;

class PLDiagram {
 public:
  const std::vector<Piece>& pieces() const { return pieces_; }
  int node_count() const { return nodes_; }
  /// Sites that can be operated on now. A middle arc of a composite is
  /// available once every arc enclosing it has been replaced.
  std::vector<Site> sites() const;

  /// One line per piece: "piece <id> layer <l> <from>-><to>: (x,y) ..." with
  /// coordinates as exact fractions.
  std::string dump() const;

 private:
  struct SiteData {
    Site site;
    int lower = 0;
    int upper = 0;
    Piece first;
    Piece second;
    std::vector<int> blockers;  // pieces that must be gone first
  };
  bool available(const SiteData& s) const;

  std::vector<Piece> pieces_;
  std::vector<SiteData> sites_;
  int nodes_ = 0;
  int next_id_ = 0;

  friend class DiagramBuilder;
  friend struct SurgeryAccess;
};

/// Picture of a flat word, one annulus per token from the inside out.
/// Throws FlatnessError on crossings.
PLDiagram embed(const TangleWord& w);

/// The arcs of m inside the circle of radius 2, node k-1 at point k.
PLDiagram embed_matching(const AffineMatching& m);

/// beta drawn inside the circle of radius 2, alpha's dual outside it.
PLDiagram embed_pair(const AffineMatching& alpha, const AffineMatching& beta);

/// The stack gamma | dual(beta) beta | dual(alpha) on circles of radius 2 and
/// 4, with one surgery site per arc of beta, keyed by its plus end. Piece ids: gamma arcs 0..n-1,
/// dual(beta) n..2n-1, beta 2n..3n-1, dual(alpha) 3n..4n-1, in arc order.
PLDiagram embed_composite(const AffineMatching& alpha, const AffineMatching& beta,
                          const AffineMatching& gamma);

enum class LoopClass { Trivial, Essential };

struct Loop {
  int id = 0;               // smallest piece id on the loop
  std::vector<int> pieces;  // sorted
  std::vector<Point> vertices;
  int winding = 0;
  LoopClass cls = LoopClass::Trivial;
};

/// A component with two free ends; `seam` is its signed count of crossings
/// of the seam ray, clockwise positive.
struct OpenArc {
  std::vector<int> pieces;
  int from = 0;
  int to = 0;
  std::vector<Point> vertices;
  int seam = 0;
};

struct LoopData {
  std::vector<Loop> loops;  // sorted by id
  std::vector<OpenArc> arcs;
  std::vector<int> parent;  // innermost loop whose bounded region holds the loop, or -1
  std::vector<std::vector<bool>> inside;  // inside[a][b]: loop b lies in loop a's bounded region

  std::optional<std::size_t> find(int id) const;
  bool nested(int a, int b) const;  // by id, either way round
  int count(LoopClass c) const;
};

LoopData extract_loops(const PLDiagram& d);

/// No two segments meet except at shared piece ends.
bool is_crossingless(const PLDiagram& d);

/// Signed crossings of a closed or open polyline with the upward ray from p.
int ray_crossings(const std::vector<Point>& path, bool closed, const Point& p = {});

struct SurgeryEvent {
  enum class Kind { Merge, Split };
  Kind kind = Kind::Merge;
  std::vector<int> before;
  std::vector<LoopClass> before_classes;
  std::vector<int> after;
  std::vector<LoopClass> after_classes;
  bool nested = false;  // the two trivial loops involved are nested
  Site site;
};

/// Replaces the cap-cup pair at `site` by two through strands. The event
/// lists the loops that lose or gain pieces. Throws InvalidSite.
std::pair<PLDiagram, SurgeryEvent> surgery(const PLDiagram& d, Site site);

}  // namespace annarc
