#include "annarc/arc_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "annarc/error.hpp"

namespace annarc {

int label_degree(Label l) {
  switch (l) {
    case Label::One: return -1;
    case Label::X: return 1;
    default: return 0;
  }
}

LoopClass label_class(Label l) {
  return l == Label::One || l == Label::X ? LoopClass::Trivial : LoopClass::Essential;
}

std::string label_name(Label l) {
  switch (l) {
    case Label::One: return "1";
    case Label::X: return "X";
    case Label::V: return "V";
    default: return "W";
  }
}

std::string format_tensor(const Tensor& t) {
  if (t.empty()) return "()";
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += "⊗";
    out += label_name(t[k]);
  }
  return out;
}

Tensor parse_tensor(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "()" || s.empty()) return {};
  const std::string otimes = "⊗";
  Tensor out;
  std::size_t pos = 0;
  bool want_label = true;
  while (pos < s.size()) {
    if (want_label) {
      switch (s[pos]) {
        case '1': out.push_back(Label::One); break;
        case 'X': case 'x': out.push_back(Label::X); break;
        case 'V': case 'v': out.push_back(Label::V); break;
        case 'W': case 'w': out.push_back(Label::W); break;
        default: throw SyntaxError("unexpected '" + s.substr(pos, 1) + "' at offset " + std::to_string(pos));
      }
      ++pos;
    } else if (s[pos] == '*') {
      ++pos;
    } else if (s.compare(pos, otimes.size(), otimes) == 0) {
      pos += otimes.size();
    } else {
      throw SyntaxError("expected a tensor sign at offset " + std::to_string(pos));
    }
    want_label = !want_label;
  }
  if (want_label) throw SyntaxError("tensor expression ends with a tensor sign");
  return out;
}

HomSpace::HomSpace(AffineMatching alpha, AffineMatching beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.n() != beta_.n()) throw ArityError("Hom space between matchings of different sizes");
  const PLDiagram d = embed_pair(alpha_, beta_);
  const LoopData ld = extract_loops(d);
  struct Entry {
    std::vector<int> points;
    std::vector<int> pieces;
    LoopClass cls;
  };
  std::vector<Entry> entries;
  for (const Loop& l : ld.loops) {
    std::set<int> pts;
    for (int id : l.pieces) {
      const Piece& p = d.pieces()[id];
      pts.insert(p.from + 1);
      pts.insert(p.to + 1);
    }
    entries.push_back({{pts.begin(), pts.end()}, l.pieces, l.cls});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.points.front() < b.points.front(); });
  for (auto& e : entries) {
    classes_.push_back(e.cls);
    points_.push_back(std::move(e.points));
    pieces_.push_back(std::move(e.pieces));
  }
}

int HomSpace::n0() const {
  return static_cast<int>(std::count(classes_.begin(), classes_.end(), LoopClass::Trivial));
}
int HomSpace::n1() const { return static_cast<int>(classes_.size()) - n0(); }

bool HomSpace::admits(const Tensor& t) const {
  if (t.size() != classes_.size()) return false;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (label_class(t[k]) != classes_[k]) return false;
  return true;
}

int HomSpace::degree(const Tensor& t) const {
  int d = shift();
  for (Label l : t) d += label_degree(l);
  return d;
}

std::vector<Tensor> HomSpace::basis() const {
  std::vector<Tensor> out{{}};
  for (LoopClass c : classes_) {
    std::vector<Tensor> next;
    for (const Tensor& t : out) {
      for (Label l : c == LoopClass::Trivial ? std::vector{Label::One, Label::X} : std::vector{Label::V, Label::W}) {
        Tensor u = t;
        u.push_back(l);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::map<int, int> HomSpace::dims() const {
  std::map<int, int> out;
  for (const Tensor& t : basis()) ++out[degree(t)];
  return out;
}

HomElement::HomElement(HomSpace space, const Tensor& t, Rational coeff) : space_(std::move(space)) {
  if (!space_.admits(t)) {
    throw LabelClassMismatch("tensor " + format_tensor(t) + " does not fit the loops of the Hom space");
  }
  add(t, coeff);
}

void HomElement::add(const Tensor& t, const Rational& c) {
  if (c.numerator() == 0) return;
  if (!space_.admits(t)) throw LabelClassMismatch("tensor " + format_tensor(t) + " does not fit the Hom space");
  Rational& slot = terms_[t];
  slot += c;
  if (slot.numerator() == 0) terms_.erase(t);
}

HomElement& HomElement::operator+=(const HomElement& o) {
  if (!(o.space_ == space_)) throw MiddleMismatch("adding elements of different Hom spaces");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

HomElement operator*(const Rational& c, const HomElement& x) {
  HomElement out(x.space_);
  for (const auto& [t, v] : x.terms_) out.add(t, c * v);
  return out;
}

std::string HomElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rational mag = c < 0 ? -c : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != Rational(1)) os << to_string(mag) << " ";
    os << format_tensor(t);
  }
  return os.str();
}

std::string map_name(StructureMap m) {
  switch (m) {
    case StructureMap::MSep: return "m_sep";
    case StructureMap::MNest: return "m_nest";
    case StructureMap::DeltaSep: return "delta_sep";
    case StructureMap::DeltaNest: return "delta_nest";
    case StructureMap::Act: return "act";
    case StructureMap::Coact: return "coact";
    case StructureMap::Pair: return "pair";
    case StructureMap::Copair: return "copair";
    default: return "iota";
  }
}

namespace {

void expect(const Tensor& in, std::initializer_list<LoopClass> classes, StructureMap m) {
  bool ok = in.size() == classes.size();
  std::size_t k = 0;
  for (LoopClass c : classes) ok = ok && label_class(in[k++]) == c;
  if (!ok) throw LabelClassMismatch(map_name(m) + " cannot take " + format_tensor(in));
}

constexpr auto T = LoopClass::Trivial;
constexpr auto E = LoopClass::Essential;

}  // namespace

Combination apply_map(StructureMap m, const Tensor& in, Coaction coaction) {
  using L = Label;
  Combination out;
  auto put = [&](Tensor t, Rational c) { out[std::move(t)] += c; };
  switch (m) {
    case StructureMap::MSep:
    case StructureMap::MNest:
      expect(in, {T, T}, m);
      if (in[0] == L::One) put({in[1]}, m == StructureMap::MNest && in[1] == L::X ? -1 : 1);
      else if (in[1] == L::One) put({in[0]}, 1);
      break;
    case StructureMap::DeltaSep:
    case StructureMap::DeltaNest:
      expect(in, {T}, m);
      if (in[0] == L::One) {
        put({L::One, L::X}, m == StructureMap::DeltaNest ? -1 : 1);
        put({L::X, L::One}, 1);
      } else {
        put({L::X, L::X}, m == StructureMap::DeltaNest ? -1 : 1);
      }
      break;
    case StructureMap::Act:
      expect(in, {T, E}, m);
      if (in[0] == L::One) put({in[1]}, 1);
      break;
    case StructureMap::Coact:
      expect(in, {E}, m);
      put({coaction == Coaction::Paper ? L::One : L::X, in[0]}, 1);
      break;
    case StructureMap::Pair:
      expect(in, {E, E}, m);
      if (in[0] != in[1]) put({L::X}, in[0] == L::V ? 1 : -1);
      break;
    case StructureMap::Copair:
      expect(in, {T}, m);
      if (in[0] == L::One) {
        put({L::V, L::W}, 1);
        put({L::W, L::V}, -1);
      }
      break;
    case StructureMap::Iota:
      expect(in, {T}, m);
      put({in[0]}, in[0] == L::X ? -1 : 1);
      break;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.numerator() == 0; });
  return out;
}

Combination apply_map(StructureMap m, const Combination& in, Coaction coaction) {
  Combination out;
  for (const auto& [t, c] : in)
    for (const auto& [u, d] : apply_map(m, t, coaction)) out[u] += c * d;
  std::erase_if(out, [](const auto& kv) { return kv.second.numerator() == 0; });
  return out;
}

namespace {

struct Plan {
  std::vector<int> x_loops;  // composite loop ids of x's factors
  std::vector<int> y_loops;
  struct Step {
    StructureMap map;
    std::vector<int> inputs;   // loop ids in map factor order
    std::vector<int> outputs;
  };
  std::vector<Step> steps;
  std::vector<PlanStep> events;
  std::vector<int> result_loops;  // composite loop ids of the result's factors
};

using PlanKey = std::tuple<std::string, std::string, std::string, std::vector<int>>;

std::shared_ptr<const Plan> build_plan(const AffineMatching& alpha, const AffineMatching& beta,
                                       const AffineMatching& gamma, const std::vector<int>& order) {
  const int n = beta.n();
  auto plan = std::make_shared<Plan>();
  PLDiagram d = embed_composite(alpha, beta, gamma);
  LoopData ld = extract_loops(d);
  auto owner = [](const LoopData& l, int piece) {
    for (const Loop& loop : l.loops)
      if (std::binary_search(loop.pieces.begin(), loop.pieces.end(), piece)) return loop.id;
    throw std::logic_error("piece on no loop");
  };
  const HomSpace xs(alpha, beta), ys(beta, gamma), rs(alpha, gamma);
  for (const auto& pieces : xs.loop_pieces()) plan->x_loops.push_back(owner(ld, pieces.front() + 2 * n));
  for (const auto& pieces : ys.loop_pieces()) plan->y_loops.push_back(owner(ld, pieces.front()));

  for (int plus : order) {
    auto [next, ev] = surgery(d, {kMiddleLayer, plus});
    const LoopData after = extract_loops(next);
    auto outer_first = [](const LoopData& l, std::vector<int> ids) {
      if (l.inside[*l.find(ids[1])][*l.find(ids[0])]) std::swap(ids[0], ids[1]);
      return ids;
    };
    auto trivial_first = [](const std::vector<int>& ids, const std::vector<LoopClass>& cls) {
      return cls[0] == LoopClass::Trivial ? ids : std::vector<int>{ids[1], ids[0]};
    };
    Plan::Step step;
    if (ev.kind == SurgeryEvent::Kind::Merge) {
      step.outputs = ev.after;
      const auto& c = ev.before_classes;
      if (c[0] == T && c[1] == T) {
        step.map = ev.nested ? StructureMap::MNest : StructureMap::MSep;
        step.inputs = ev.nested ? outer_first(ld, ev.before) : ev.before;
      } else if (c[0] == E && c[1] == E) {
        step.map = StructureMap::Pair;
        step.inputs = outer_first(ld, ev.before);
      } else {
        step.map = StructureMap::Act;
        step.inputs = trivial_first(ev.before, c);
      }
    } else {
      step.inputs = ev.before;
      const auto& c = ev.after_classes;
      if (c[0] == T && c[1] == T) {
        step.map = ev.nested ? StructureMap::DeltaNest : StructureMap::DeltaSep;
        step.outputs = ev.nested ? outer_first(after, ev.after) : ev.after;
      } else if (c[0] == E && c[1] == E) {
        step.map = StructureMap::Copair;
        step.outputs = outer_first(after, ev.after);
      } else {
        step.map = StructureMap::Coact;
        step.outputs = trivial_first(ev.after, c);
      }
    }
    plan->events.push_back({ev, step.map});
    plan->steps.push_back(std::move(step));
    d = std::move(next);
    ld = after;
  }
  for (const auto& pieces : rs.loop_pieces()) {
    const int p = pieces.front();
    plan->result_loops.push_back(owner(ld, p < n ? p : p + 2 * n));
  }
  return plan;
}

std::shared_ptr<const Plan> cached_plan(const AffineMatching& alpha, const AffineMatching& beta,
                                        const AffineMatching& gamma, std::vector<int> order) {
  if (order.empty()) order = default_order(beta);
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pluses;
    for (const Arc& a : beta.arcs()) pluses.push_back(a.plus);
    if (sorted != pluses) throw InvalidSite("surgery order must list every middle arc once by its plus end");
  }
  static std::mutex mu;
  static std::map<PlanKey, std::shared_ptr<const Plan>> cache;
  PlanKey key{to_signs(alpha), to_signs(beta), to_signs(gamma), order};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto plan = build_plan(alpha, beta, gamma, order);
  std::lock_guard lock(mu);
  return cache.emplace(key, plan).first->second;
}

}  // namespace

namespace {

// Middle arcs whose enclosing arcs are all in `done`.
std::vector<int> ready(const AffineMatching& beta, const std::vector<int>& done) {
  const int pts = beta.points();
  auto encloses = [&](const Arc& outer, const Arc& inner) {
    return &outer != &inner && (inner.plus - outer.plus + pts) % pts < (outer.minus - outer.plus + pts) % pts;
  };
  std::vector<int> out;
  for (const Arc& a : beta.arcs()) {
    if (std::find(done.begin(), done.end(), a.plus) != done.end()) continue;
    bool free = true;
    for (const Arc& b : beta.arcs())
      if (encloses(b, a) && std::find(done.begin(), done.end(), b.plus) == done.end()) free = false;
    if (free) out.push_back(a.plus);
  }
  return out;
}

}  // namespace

std::vector<int> default_order(const AffineMatching& beta) {
  std::vector<int> done;
  while (done.size() < beta.arcs().size()) done.push_back(ready(beta, done).front());
  return done;
}

std::vector<std::vector<int>> all_orders(const AffineMatching& beta) {
  std::vector<std::vector<int>> out;
  std::vector<int> done;
  auto rec = [&](auto&& self) -> void {
    if (done.size() == beta.arcs().size()) {
      out.push_back(done);
      return;
    }
    for (int p : ready(beta, done)) {
      done.push_back(p);
      self(self);
      done.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<PlanStep> compose_steps(const AffineMatching& alpha, const AffineMatching& beta,
                                    const AffineMatching& gamma, const std::vector<int>& order) {
  return cached_plan(alpha, beta, gamma, order)->events;
}

HomElement compose(const HomElement& x, const HomElement& y, const ComposeOptions& opt) {
  if (!(x.space().beta() == y.space().alpha())) {
    throw MiddleMismatch("x ends at " + to_signs(x.space().beta()) + " but y starts at " +
                         to_signs(y.space().alpha()));
  }
  const AffineMatching& alpha = x.space().alpha();
  const AffineMatching& beta = x.space().beta();
  const AffineMatching& gamma = y.space().beta();
  auto plan = cached_plan(alpha, beta, gamma, opt.order);

  std::vector<int> loops = plan->x_loops;
  loops.insert(loops.end(), plan->y_loops.begin(), plan->y_loops.end());
  Combination state;
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      Tensor t = tx;
      t.insert(t.end(), ty.begin(), ty.end());
      state[t] += cx * cy;
    }
  }
  for (const Plan::Step& step : plan->steps) {
    std::vector<std::size_t> at;
    for (int id : step.inputs) at.push_back(std::find(loops.begin(), loops.end(), id) - loops.begin());
    std::vector<int> kept;
    for (std::size_t k = 0; k < loops.size(); ++k)
      if (std::find(at.begin(), at.end(), k) == at.end()) kept.push_back(loops[k]);
    Combination next;
    for (const auto& [t, c] : state) {
      Tensor in;
      for (std::size_t k : at) in.push_back(t[k]);
      Tensor rest;
      for (std::size_t k = 0; k < t.size(); ++k)
        if (std::find(at.begin(), at.end(), k) == at.end()) rest.push_back(t[k]);
      for (const auto& [u, d] : apply_map(step.map, in, opt.coaction)) {
        Tensor v = rest;
        v.insert(v.end(), u.begin(), u.end());
        next[v] += c * d;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.numerator() == 0; });
    state = std::move(next);
    loops = std::move(kept);
    loops.insert(loops.end(), step.outputs.begin(), step.outputs.end());
  }

  HomElement out(HomSpace(alpha, gamma));
  std::vector<std::size_t> from;
  for (int id : plan->result_loops) from.push_back(std::find(loops.begin(), loops.end(), id) - loops.begin());
  for (const auto& [t, c] : state) {
    Tensor u;
    for (std::size_t k : from) u.push_back(t[k]);
    out.add(u, c);
  }
  return out;
}

HomElement identity(const AffineMatching& alpha) {
  HomSpace space(alpha, alpha);
  return HomElement(space, Tensor(space.loops().size(), Label::One));
}

std::optional<int> degree(const HomElement& x) {
  std::optional<int> d;
  for (const auto& [t, c] : x.terms()) {
    const int dt = x.space().degree(t);
    if (d && *d != dt) return std::nullopt;
    d = dt;
  }
  return d;
}

HomElement rotate(const HomElement& x) {
  const HomSpace& s = x.space();
  const int pts = 2 * s.n();
  if (pts == 0) return x;
  const Generator r = Generator::rot(pts);
  HomSpace target(act_generator(s.alpha(), r).matching, act_generator(s.beta(), r).matching);
  // Point k moves to k - 1; find each old loop's image by one of its points.
  std::vector<std::size_t> image;
  for (const auto& pts_old : s.loop_points()) {
    const int moved = pts_old.front() == 1 ? pts : pts_old.front() - 1;
    const auto& tp = target.loop_points();
    for (std::size_t k = 0; k < tp.size(); ++k)
      if (std::binary_search(tp[k].begin(), tp[k].end(), moved)) image.push_back(k);
  }
  HomElement out(target);
  for (const auto& [t, c] : x.terms()) {
    Tensor u(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) u[image[k]] = t[k];
    out.add(u, c);
  }
  return out;
}

}  // namespace annarc
