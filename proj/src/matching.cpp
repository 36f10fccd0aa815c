#include "annarc/matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "annarc/error.hpp"

namespace annarc {

namespace {

// Points covered by the clockwise interval from a.plus to a.minus.
std::vector<bool> interval(const Arc& a, int points) {
  std::vector<bool> in(points, false);
  for (int p = a.plus;; p = p % points + 1) {
    in[p - 1] = true;
    if (p == a.minus) break;
  }
  return in;
}

}  // namespace

AffineMatching AffineMatching::from_arcs(int n, std::vector<Arc> arcs) {
  if (n < 0 || static_cast<int>(arcs.size()) != n) {
    throw IndexError("a matching on " + std::to_string(2 * n) + " points needs " +
                     std::to_string(n) + " arcs");
  }
  AffineMatching m;
  m.n_ = n;
  const int pts = 2 * n;
  m.partner_.assign(pts, 0);
  m.seam_.assign(pts, 0);
  m.plus_.assign(pts, false);
  for (const Arc& a : arcs) {
    for (int p : {a.plus, a.minus}) {
      if (p < 1 || p > pts) throw IndexError("arc endpoint " + std::to_string(p) + " out of range");
      if (m.partner_[p - 1] != 0) throw IndexError("point " + std::to_string(p) + " used twice");
    }
    if (a.plus == a.minus) throw IndexError("degenerate arc");
    if (a.seam != (a.plus > a.minus ? 1 : 0)) {
      throw IndexError("arc (" + std::to_string(a.plus) + "," + std::to_string(a.minus) +
                       ") has non-canonical seam count " + std::to_string(a.seam));
    }
    m.partner_[a.plus - 1] = a.minus;
    m.partner_[a.minus - 1] = a.plus;
    m.seam_[a.plus - 1] = a.seam;
    m.seam_[a.minus - 1] = -a.seam;
    m.plus_[a.plus - 1] = true;
  }
  std::vector<std::vector<bool>> spans;
  spans.reserve(arcs.size());
  for (const Arc& a : arcs) spans.push_back(interval(a, pts));
  // Spans must be disjoint, or one must lie strictly inside the other,
  // away from the outer arc's endpoints.
  auto inside = [&](std::size_t in, std::size_t out) {
    for (int p = 0; p < pts; ++p) {
      if (spans[in][p] && !spans[out][p]) return false;
    }
    return !spans[in][arcs[out].plus - 1] && !spans[in][arcs[out].minus - 1];
  };
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      bool meet = false;
      for (int p = 0; p < pts; ++p) meet = meet || (spans[x][p] && spans[y][p]);
      if (meet && !inside(x, y) && !inside(y, x)) throw IndexError("arcs cross");
    }
  }
  std::sort(arcs.begin(), arcs.end());
  m.arcs_ = std::move(arcs);
  return m;
}

const Arc& AffineMatching::arc_at(int p) const {
  const int plus = is_plus(p) ? p : partner(p);
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), plus,
                             [](const Arc& a, int v) { return a.plus < v; });
  return *it;
}

bool is_balanced(std::string_view signs) {
  if (signs.size() % 2) return false;
  long plus = std::count(signs.begin(), signs.end(), '+');
  long minus = std::count(signs.begin(), signs.end(), '-');
  return plus == minus && plus + minus == static_cast<long>(signs.size());
}

AffineMatching from_signs(std::string_view signs) {
  if (!is_balanced(signs)) {
    throw UnbalancedSequence("\"" + std::string(signs) + "\" is not a balanced +/- sequence");
  }
  const int pts = static_cast<int>(signs.size());
  std::vector<Arc> arcs;
  for (int p = 1; p <= pts; ++p) {
    if (signs[p - 1] != '+') continue;
    int depth = 0;
    for (int q = p % pts + 1;; q = q % pts + 1) {
      if (signs[q - 1] == '+') {
        ++depth;
      } else if (depth == 0) {
        arcs.push_back({p, q, p > q ? 1 : 0});
        break;
      } else {
        --depth;
      }
    }
  }
  return AffineMatching::from_arcs(pts / 2, std::move(arcs));
}

std::string to_signs(const AffineMatching& m) {
  std::string s(m.points(), '-');
  for (const Arc& a : m.arcs()) s[a.plus - 1] = '+';
  return s;
}

std::vector<AffineMatching> enumerate(int n) {
  std::vector<AffineMatching> out;
  std::string s;
  auto rec = [&](auto&& self, int plus, int minus) -> void {
    if (plus == n && minus == n) {
      out.push_back(from_signs(s));
      return;
    }
    if (plus < n) {
      s.push_back('+');
      self(self, plus + 1, minus);
      s.pop_back();
    }
    if (minus < n) {
      s.push_back('-');
      self(self, plus, minus + 1);
      s.pop_back();
    }
  };
  if (n >= 0) rec(rec, 0, 0);
  return out;
}

TangleWord matching_word(const AffineMatching& m) {
  if (m.n() == 0) return TangleWord::identity(0);
  const int pts = m.points();
  for (const Arc& a : m.arcs()) {
    if (a.minus != a.plus + 1) continue;
    std::vector<Arc> rest;
    auto shift = [&](int p) { return p > a.plus ? p - 2 : p; };
    for (const Arc& b : m.arcs()) {
      if (b == a) continue;
      rest.push_back({shift(b.plus), shift(b.minus), b.seam});
    }
    TangleWord inner = matching_word(AffineMatching::from_arcs(m.n() - 1, std::move(rest)));
    return compose(inner, TangleWord(inner.target(), {Generator::cup(pts, a.plus)}));
  }
  // Only the arc across the seam is innermost; rotate it into view.
  AffineMatching turned = act_generator(m, Generator::rot(pts)).matching;
  TangleWord inner = matching_word(turned);
  return compose(inner, TangleWord(pts, {Generator::rot_inv(pts)}));
}

TangleWord closure_word(const AffineMatching& alpha, const AffineMatching& beta) {
  if (alpha.n() != beta.n()) throw ArityError("closure of matchings of different sizes");
  return compose(matching_word(beta), dual(matching_word(alpha)));
}

FlatState::FlatState(int source) {
  if (source < 0) throw ArityError("negative arity");
  inner_.resize(source);
  outer_.resize(source);
  for (int q = 0; q < source; ++q) {
    inner_[q] = {{false, q}, 0};
    outer_[q] = {{true, q}, 0};
  }
}

FlatState::FlatState(const AffineMatching& m) {
  outer_.resize(m.points());
  for (int p = 1; p <= m.points(); ++p) outer_[p - 1] = {{false, m.partner(p) - 1}, m.seam_from(p)};
}

void FlatState::apply(const Generator& g) {
  validate(g);
  if (g.is_crossing()) throw FlatnessError("crossing " + to_string(g) + " in a flat evaluation");
  if (g.source() != arity()) {
    throw ArityError("token " + to_string(g) + " applied to " + std::to_string(arity()) + " strands");
  }
  switch (g.kind) {
    case GenKind::Cup: cup(g.index); break;
    case GenKind::Cap: cap(g.index); break;
    case GenKind::RotCCW: rotate(true); break;
    case GenKind::RotCW: rotate(false); break;
    case GenKind::TwistPos: ++shift_; break;
    case GenKind::TwistNeg: --shift_; break;
    default: break;
  }
}

void FlatState::apply(const TangleWord& w) {
  if (w.source() != arity()) {
    throw ArityError("word with source " + std::to_string(w.source()) + " applied to " +
                     std::to_string(arity()) + " strands");
  }
  for (const Generator& g : w.tokens()) apply(g);
}

void FlatState::cup(int i) {
  const int at = i - 1;
  auto remap = [&](End& e) {
    if (!e.inner && e.index >= at) e.index += 2;
  };
  for (Link& l : outer_) remap(l.to);
  for (Link& l : inner_) remap(l.to);
  outer_.insert(outer_.begin() + at, {Link{{false, at + 1}, 0}, Link{{false, at}, 0}});
}

void FlatState::cap(int i) {
  const int a = i - 1, b = i;
  const Link la = outer_[a], lb = outer_[b];
  if (la.to == End{false, b}) {
    if (la.seam == 0) ++n0_;
    else ++n1_;
  } else {
    const int s = -la.seam + lb.seam;
    link(la.to) = {lb.to, s};
    link(lb.to) = {la.to, -s};
  }
  outer_.erase(outer_.begin() + a, outer_.begin() + b + 1);
  auto remap = [&](End& e) {
    if (!e.inner && e.index > b) e.index -= 2;
  };
  for (Link& l : outer_) remap(l.to);
  for (Link& l : inner_) remap(l.to);
}

void FlatState::rotate(bool ccw) {
  const int m = arity();
  auto moved = [&](int old) { return ccw ? (old + m - 1) % m : (old + 1) % m; };
  // Seam count from a new point back to the old point it came from.
  auto delta = [&](int now) {
    if (ccw) return now == m - 1 ? 1 : 0;
    return now == 0 ? -1 : 0;
  };
  std::vector<Link> out(m);
  for (int old = 0; old < m; ++old) {
    const int now = moved(old);
    Link l = outer_[old];
    int seam = delta(now) + l.seam;
    if (!l.to.inner) {
      l.to.index = moved(l.to.index);
      seam -= delta(l.to.index);
    }
    out[now] = {l.to, seam};
  }
  for (Link& l : inner_) {
    l.to.index = moved(l.to.index);
    l.seam -= delta(l.to.index);
  }
  outer_ = std::move(out);
}

AffineMatching FlatState::matching() const {
  if (source() != 0) throw ArityError("state with through strands has no matching");
  std::vector<Arc> arcs;
  for (int p = 0; p < arity(); ++p) {
    const int q = outer_[p].to.index;
    const int s = outer_[p].seam;
    if (s == (p > q ? 1 : 0)) {
      arcs.push_back({p + 1, q + 1, s});
    } else if (-s != (q > p ? 1 : 0)) {
      throw std::logic_error("arc with seam count " + std::to_string(s) + " is not embedded");
    }
  }
  return AffineMatching::from_arcs(arity() / 2, std::move(arcs));
}

EvaluationResult act_generator(const AffineMatching& m, const Generator& g) {
  FlatState st(m);
  st.apply(g);
  if (st.arity() % 2) throw ArityError("odd arity " + std::to_string(st.arity()));
  return {st.matching(), st.n0(), st.n1(), st.shift()};
}

EvaluationResult evaluate_word(const TangleWord& w) {
  if (w.source() != 0) throw ArityError("evaluation needs a word with source arity 0");
  if (!w.is_flat()) throw FlatnessError("word has " + std::to_string(w.crossing_count()) + " crossings");
  FlatState st(0);
  st.apply(w);
  return {st.matching(), st.n0(), st.n1(), st.shift()};
}

}  // namespace annarc
