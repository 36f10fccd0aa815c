#include "annarc/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "annarc/error.hpp"

namespace annarc {

namespace {

Rational floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return Rational(q);
}

// Sign of (b - a) x (c - a).
int orient(const Point& a, const Point& b, const Point& c) {
  const Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Radial, then clockwise around at rho_mid, then radial again.
std::vector<Point> jog(const Rational& theta_a, const Rational& theta_b, const Rational& r0,
                       const Rational& mid, const Rational& r1) {
  Rational end = theta_b;
  while (end <= theta_a) end += 1;
  std::vector<Point> path;
  auto push = [&](const Point& p) {
    if (path.empty() || !(path.back() == p)) path.push_back(p);
  };
  push(on_circle(r0, theta_a));
  push(on_circle(mid, theta_a));
  for (Rational c = floor_of(theta_a * 4) / 4 + Rational(1, 4); c < end; c += Rational(1, 4))
    push(on_circle(mid, c));
  push(on_circle(mid, end));
  push(on_circle(r1, end));
  return path;
}

std::vector<Point> radial(const Rational& theta, const Rational& r0, const Rational& r1) {
  return {on_circle(r0, theta), on_circle(r1, theta)};
}

Rational point_theta(int n, int k) { return Rational(2 * k - 1, 4 * n); }

}  // namespace

Point on_circle(const Rational& rho, const Rational& theta) {
  const Rational t = theta - floor_of(theta);
  const Rational u = 4 * t - floor_of(4 * t);
  Point p;
  switch (boost::rational_cast<long long>(floor_of(4 * t))) {
    case 0: p = {u, 1 - u}; break;
    case 1: p = {1 - u, -u}; break;
    case 2: p = {-u, -1 + u}; break;
    default: p = {-1 + u, u}; break;
  }
  return {rho * p.x, rho * p.y};
}

class DiagramBuilder {
 public:
  explicit DiagramBuilder(PLDiagram& d) : d_(d) {}

  int add(int layer, int from, int to, std::vector<Point> path) {
    const int id = d_.next_id_++;
    d_.pieces_.push_back({id, layer, from, to, std::move(path)});
    return id;
  }
  void nodes(int count) { d_.nodes_ = count; }
  void site(Site s, int lower, int upper, Piece first, Piece second, std::vector<int> blockers = {}) {
    d_.sites_.push_back({s, lower, upper, std::move(first), std::move(second), std::move(blockers)});
  }

 private:
  PLDiagram& d_;
};

std::vector<Site> PLDiagram::sites() const {
  std::vector<Site> out;
  for (const auto& s : sites_)
    if (available(s)) out.push_back(s.site);
  return out;
}

bool PLDiagram::available(const SiteData& s) const {
  return std::none_of(s.blockers.begin(), s.blockers.end(), [&](int id) {
    return std::any_of(pieces_.begin(), pieces_.end(), [&](const Piece& p) { return p.id == id; });
  });
}

std::string PLDiagram::dump() const {
  std::ostringstream os;
  for (const Piece& p : pieces_) {
    os << "piece " << p.id << " layer " << p.layer << " " << p.from << "->" << p.to << ":";
    for (const Point& v : p.path) os << " (" << to_string(v.x) << "," << to_string(v.y) << ")";
    os << "\n";
  }
  return os.str();
}

PLDiagram embed(const TangleWord& w) {
  if (!w.is_flat()) throw FlatnessError("cannot draw a word with crossings");

  // Pieces are first recorded against column ids; angles are fixed once the
  // cyclic order of all columns is known.
  struct Proto {
    int layer;
    int from, to;
    int col_a, col_b;
    Rational r0, mid, r1;
    bool straight;
  };
  std::vector<int> order;  // cyclic order of every column ever used
  std::vector<int> live;   // columns in label order
  int columns = 0;
  std::map<std::pair<int, int>, int> node_ids;
  auto node = [&](int circle, int col) {
    auto [it, fresh] = node_ids.emplace(std::pair{circle, col}, static_cast<int>(node_ids.size()));
    return it->second;
  };
  std::vector<Proto> protos;
  struct PendingSite {
    Site site;
    std::size_t lower, upper;
    Proto first, second;
  };
  std::vector<PendingSite> pending;

  for (int c = 0; c < w.source(); ++c) {
    order.push_back(columns);
    live.push_back(columns++);
  }
  const auto& tokens = w.tokens();
  std::optional<std::size_t> last_cap;
  int cap_a = 0, cap_b = 0;
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    const Generator& g = tokens[pos];
    const int l = static_cast<int>(pos);
    const Rational lo(l + 1), hi(l + 2), half(2 * l + 3, 2);
    std::vector<int> busy;
    std::optional<std::size_t> cap_here;
    if (g.kind == GenKind::Cup) {
      const int m = g.strands - 2;
      const int a = columns++, b = columns++;
      auto at = order.end();
      if (m > 0) at = std::find(order.begin(), order.end(), g.index <= m ? live[g.index - 1] : live[0]);
      order.insert(at, {a, b});
      live.insert(live.begin() + (g.index - 1), {a, b});
      protos.push_back({l, node(l + 1, a), node(l + 1, b), a, b, hi, half, hi, false});
      busy = {a, b};
      if (last_cap && tokens[pos - 1].kind == GenKind::Cap && tokens[pos - 1].index == g.index) {
        const Rational r1(l + 2), up(4 * l + 5, 4), down(4 * l + 3, 4);
        const Rational r0(l);
        pending.push_back({{l - 1, g.index},
                           *last_cap,
                           protos.size() - 1,
                           {l - 1, node(l - 1, cap_a), node(l + 1, a), cap_a, a, r0, up, r1, false},
                           {l - 1, node(l - 1, cap_b), node(l + 1, b), cap_b, b, r0, down, r1, false}});
      }
    } else if (g.kind == GenKind::Cap) {
      const int a = live[g.index - 1], b = live[g.index];
      protos.push_back({l, node(l, a), node(l, b), a, b, lo, half, lo, false});
      cap_here = protos.size() - 1;
      cap_a = a;
      cap_b = b;
      live.erase(live.begin() + (g.index - 1), live.begin() + (g.index + 1));
      busy = {a, b};
    }
    for (int c : live) {
      if (std::find(busy.begin(), busy.end(), c) != busy.end()) continue;
      protos.push_back({l, node(l, c), node(l + 1, c), c, c, lo, lo, hi, true});
    }
    if (g.kind == GenKind::RotCCW && !live.empty()) std::rotate(live.begin(), live.begin() + 1, live.end());
    if (g.kind == GenKind::RotCW && !live.empty()) std::rotate(live.rbegin(), live.rbegin() + 1, live.rend());
    last_cap = cap_here;
  }

  std::vector<Rational> theta(columns);
  const int total = static_cast<int>(order.size());
  for (int r = 0; r < total; ++r) theta[order[r]] = Rational(2 * r + 1, 2 * total);
  auto draw = [&](const Proto& p) {
    if (p.straight) return radial(theta[p.col_a], p.r0, p.r1);
    return jog(theta[p.col_a], theta[p.col_b], p.r0, p.mid, p.r1);
  };

  PLDiagram d;
  DiagramBuilder b(d);
  std::vector<int> ids;
  for (const Proto& p : protos) ids.push_back(b.add(p.layer, p.from, p.to, draw(p)));
  for (const PendingSite& s : pending) {
    b.site(s.site, ids[s.lower], ids[s.upper],
           {0, s.first.layer, s.first.from, s.first.to, draw(s.first)},
           {0, s.second.layer, s.second.from, s.second.to, draw(s.second)});
  }
  b.nodes(static_cast<int>(node_ids.size()));
  return d;
}

namespace {

// Depth of each arc: one more than the deepest arc nested under it.
std::vector<int> heights(const AffineMatching& m) {
  const auto& arcs = m.arcs();
  const int pts = m.points();
  auto span = [&](const Arc& a) {
    std::vector<bool> in(pts + 1, false);
    for (int p = a.plus;; p = p % pts + 1) {
      in[p] = true;
      if (p == a.minus) break;
    }
    return in;
  };
  std::vector<int> h(arcs.size(), 0);
  std::vector<std::size_t> idx(arcs.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto width = [&](const Arc& a) { return (a.minus - a.plus + pts) % pts; };
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return width(arcs[x]) < width(arcs[y]); });
  for (std::size_t x : idx) {
    const auto in = span(arcs[x]);
    int best = 0;
    for (std::size_t y = 0; y < arcs.size(); ++y)
      if (y != x && in[arcs[y].plus] && in[arcs[y].minus] && width(arcs[y]) < width(arcs[x]))
        best = std::max(best, h[y]);
    h[x] = best + 1;
  }
  return h;
}

// Arcs of m hanging off the circle of radius rho towards `dir` (+1 outwards).
void band(DiagramBuilder& b, const AffineMatching& m, int rho, int dir, int layer, int node_base) {
  const int n = m.n();
  const auto h = heights(m);
  for (std::size_t x = 0; x < m.arcs().size(); ++x) {
    const Arc& a = m.arcs()[x];
    const Rational depth = Rational(rho) + Rational(dir * h[x], n + 1);
    b.add(layer, node_base + a.plus - 1, node_base + a.minus - 1,
          jog(point_theta(n, a.plus), point_theta(n, a.minus), Rational(rho), depth, Rational(rho)));
  }
}

}  // namespace

PLDiagram embed_matching(const AffineMatching& m) {
  PLDiagram d;
  DiagramBuilder b(d);
  band(b, m, 2, -1, 0, 0);
  b.nodes(m.points());
  return d;
}

PLDiagram embed_pair(const AffineMatching& alpha, const AffineMatching& beta) {
  if (alpha.n() != beta.n()) throw ArityError("matchings of different sizes");
  PLDiagram d;
  DiagramBuilder b(d);
  band(b, beta, 2, -1, 0, 0);
  band(b, alpha, 2, 1, 1, 0);
  b.nodes(beta.points());
  return d;
}

PLDiagram embed_composite(const AffineMatching& alpha, const AffineMatching& beta,
                          const AffineMatching& gamma) {
  if (alpha.n() != beta.n() || beta.n() != gamma.n()) throw ArityError("matchings of different sizes");
  const int n = beta.n(), pts = beta.points();
  const auto h = heights(beta);
  auto encloses = [&](const Arc& outer, const Arc& inner) {
    return (inner.plus - outer.plus + pts) % pts < (outer.minus - outer.plus + pts) % pts;
  };
  PLDiagram d;
  DiagramBuilder b(d);
  band(b, gamma, 2, -1, 0, 0);
  band(b, beta, 2, 1, kMiddleLayer, 0);
  band(b, beta, 4, -1, 2, pts);
  band(b, alpha, 4, 1, 3, pts);
  for (int x = 0; x < n; ++x) {
    const Arc& a = beta.arcs()[x];
    auto through = [&](int p) {
      return Piece{0, kMiddleLayer, p - 1, pts + p - 1, radial(point_theta(n, p), Rational(2), Rational(4))};
    };
    std::vector<int> blockers;
    for (int y = 0; y < n; ++y)
      if (h[y] > h[x] && encloses(beta.arcs()[y], a)) blockers.push_back(n + y);
    b.site({kMiddleLayer, a.plus}, n + x, 2 * n + x, through(a.plus), through(a.minus), std::move(blockers));
  }
  b.nodes(2 * pts);
  return d;
}

int ray_crossings(const std::vector<Point>& path, bool closed, const Point& p) {
  int count = 0;
  const std::size_t edges = closed ? path.size() : (path.empty() ? 0 : path.size() - 1);
  for (std::size_t e = 0; e < edges; ++e) {
    const Point& a = path[e];
    const Point& c = path[(e + 1) % path.size()];
    const bool a_left = a.x < p.x, c_left = c.x < p.x;
    if (a_left == c_left) continue;
    // Height where the edge meets the vertical line through p.
    const Rational y = a.y + (c.y - a.y) * (p.x - a.x) / (c.x - a.x);
    if (y <= p.y) continue;
    count += a_left ? 1 : -1;
  }
  return count;
}

std::optional<std::size_t> LoopData::find(int id) const {
  for (std::size_t x = 0; x < loops.size(); ++x)
    if (loops[x].id == id) return x;
  return std::nullopt;
}

bool LoopData::nested(int a, int b) const {
  auto x = find(a), y = find(b);
  if (!x || !y) return false;
  return inside[*x][*y] || inside[*y][*x];
}

int LoopData::count(LoopClass c) const {
  return static_cast<int>(std::count_if(loops.begin(), loops.end(), [&](const Loop& l) { return l.cls == c; }));
}

LoopData extract_loops(const PLDiagram& d) {
  const auto& pieces = d.pieces();
  std::vector<std::vector<std::size_t>> at(d.node_count());
  for (std::size_t x = 0; x < pieces.size(); ++x) {
    at[pieces[x].from].push_back(x);
    at[pieces[x].to].push_back(x);
  }
  std::vector<bool> used(pieces.size(), false);
  auto walk = [&](std::size_t first, int start, std::vector<int>& ids, std::vector<Point>& verts) {
    int here = start;
    std::size_t cur = first;
    while (true) {
      used[cur] = true;
      const Piece& p = pieces[cur];
      ids.push_back(p.id);
      std::vector<Point> path = p.path;
      int next = p.to;
      if (p.from != here) {
        std::reverse(path.begin(), path.end());
        next = p.from;
      }
      for (const Point& v : path)
        if (verts.empty() || !(verts.back() == v)) verts.push_back(v);
      here = next;
      std::optional<std::size_t> step;
      for (std::size_t q : at[here])
        if (!used[q]) step = q;
      if (!step) return here;
      cur = *step;
    }
  };

  LoopData out;
  for (int nd = 0; nd < d.node_count(); ++nd) {
    if (at[nd].size() != 1 || used[at[nd][0]]) continue;
    OpenArc arc;
    arc.from = nd;
    arc.to = walk(at[nd][0], nd, arc.pieces, arc.vertices);
    arc.seam = ray_crossings(arc.vertices, false);
    std::sort(arc.pieces.begin(), arc.pieces.end());
    out.arcs.push_back(std::move(arc));
  }
  for (std::size_t x = 0; x < pieces.size(); ++x) {
    if (used[x]) continue;
    Loop loop;
    walk(x, pieces[x].from, loop.pieces, loop.vertices);
    if (loop.vertices.size() > 1 && loop.vertices.front() == loop.vertices.back()) loop.vertices.pop_back();
    std::sort(loop.pieces.begin(), loop.pieces.end());
    loop.id = loop.pieces.front();
    loop.winding = ray_crossings(loop.vertices, true);
    if (loop.winding < -1 || loop.winding > 1)
      throw std::logic_error("embedded loop with winding " + std::to_string(loop.winding));
    loop.cls = loop.winding == 0 ? LoopClass::Trivial : LoopClass::Essential;
    out.loops.push_back(std::move(loop));
  }
  std::sort(out.loops.begin(), out.loops.end(), [](const Loop& a, const Loop& b) { return a.id < b.id; });

  const std::size_t k = out.loops.size();
  out.inside.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (a != b) out.inside[a][b] = ray_crossings(out.loops[a].vertices, true, out.loops[b].vertices.front()) != 0;
  out.parent.assign(k, -1);
  for (std::size_t b = 0; b < k; ++b) {
    int best = -1, depth = -1;
    for (std::size_t a = 0; a < k; ++a) {
      if (!out.inside[a][b]) continue;
      int da = 0;
      for (std::size_t c = 0; c < k; ++c) da += out.inside[c][a];
      if (da > depth) {
        depth = da;
        best = static_cast<int>(a);
      }
    }
    out.parent[b] = best;
  }
  return out;
}

bool is_crossingless(const PLDiagram& d) {
  struct Seg {
    Point a, b;
    int piece;
    std::size_t index;
  };
  std::vector<Seg> segs;
  for (const Piece& p : d.pieces())
    for (std::size_t x = 0; x + 1 < p.path.size(); ++x) segs.push_back({p.path[x], p.path[x + 1], p.id, x});
  for (std::size_t s = 0; s < segs.size(); ++s) {
    for (std::size_t t = s + 1; t < segs.size(); ++t) {
      const Seg &u = segs[s], &v = segs[t];
      const int o1 = orient(u.a, u.b, v.a), o2 = orient(u.a, u.b, v.b);
      const int o3 = orient(v.a, v.b, u.a), o4 = orient(v.a, v.b, u.b);
      if (o1 * o2 < 0 && o3 * o4 < 0) return false;
      if (o1 == 0 && o2 == 0) {
        // Collinear: allowed to share at most one endpoint.
        int touching = 0;
        for (const Point& p : {v.a, v.b})
          if (on_segment(u.a, u.b, p)) ++touching;
        for (const Point& p : {u.a, u.b})
          if (on_segment(v.a, v.b, p)) ++touching;
        const bool share = u.a == v.a || u.a == v.b || u.b == v.a || u.b == v.b;
        if (touching > 2 || (touching > 0 && !share)) return false;
        continue;
      }
      std::vector<Point> contacts;
      if (o1 == 0 && on_segment(u.a, u.b, v.a)) contacts.push_back(v.a);
      if (o2 == 0 && on_segment(u.a, u.b, v.b)) contacts.push_back(v.b);
      if (o3 == 0 && on_segment(v.a, v.b, u.a)) contacts.push_back(u.a);
      if (o4 == 0 && on_segment(v.a, v.b, u.b)) contacts.push_back(u.b);
      for (const Point& c : contacts) {
        const bool end_u = c == u.a || c == u.b, end_v = c == v.a || c == v.b;
        if (!end_u || !end_v) return false;
      }
    }
  }
  return true;
}

struct SurgeryAccess {
  static std::pair<PLDiagram, SurgeryEvent> run(const PLDiagram& d, Site site) {
    auto it = std::find_if(d.sites_.begin(), d.sites_.end(),
                           [&](const PLDiagram::SiteData& s) { return s.site == site; });
    if (it == d.sites_.end() || !d.available(*it)) {
      throw InvalidSite("no cap-cup pair at layer " + std::to_string(site.layer) + ", index " +
                        std::to_string(site.index));
    }
    const LoopData before = extract_loops(d);
    auto owner = [](const LoopData& ld, int piece) -> std::optional<int> {
      for (const Loop& l : ld.loops)
        if (std::binary_search(l.pieces.begin(), l.pieces.end(), piece)) return l.id;
      return std::nullopt;
    };
    auto lo = owner(before, it->lower), up = owner(before, it->upper);
    if (!lo || !up) throw InvalidSite("site lies on a strand with free ends");

    PLDiagram out = d;
    std::erase_if(out.pieces_, [&](const Piece& p) { return p.id == it->lower || p.id == it->upper; });
    const int lower = it->lower, upper = it->upper;
    Piece first = it->first, second = it->second;
    first.id = out.next_id_++;
    second.id = out.next_id_++;
    out.pieces_.push_back(first);
    out.pieces_.push_back(second);
    std::erase_if(out.sites_, [&](const PLDiagram::SiteData& s) {
      return s.lower == lower || s.upper == upper || s.lower == upper || s.upper == lower;
    });
    const LoopData after = extract_loops(out);

    SurgeryEvent ev;
    ev.site = site;
    ev.before = {*lo};
    if (*up != *lo) ev.before.push_back(*up);
    std::sort(ev.before.begin(), ev.before.end());
    auto a1 = owner(after, first.id), a2 = owner(after, second.id);
    ev.after = {*a1};
    if (*a2 != *a1) ev.after.push_back(*a2);
    std::sort(ev.after.begin(), ev.after.end());
    for (int id : ev.before) ev.before_classes.push_back(before.loops[*before.find(id)].cls);
    for (int id : ev.after) ev.after_classes.push_back(after.loops[*after.find(id)].cls);
    if (ev.before.size() == 2 && ev.after.size() == 1) {
      ev.kind = SurgeryEvent::Kind::Merge;
      ev.nested = before.nested(ev.before[0], ev.before[1]);
    } else if (ev.before.size() == 1 && ev.after.size() == 2) {
      ev.kind = SurgeryEvent::Kind::Split;
      ev.nested = after.nested(ev.after[0], ev.after[1]);
    } else {
      throw std::logic_error("surgery changed the number of loops by other than one");
    }
    return {std::move(out), std::move(ev)};
  }
};

std::pair<PLDiagram, SurgeryEvent> surgery(const PLDiagram& d, Site site) {
  return SurgeryAccess::run(d, site);
}

}  // namespace annarc
