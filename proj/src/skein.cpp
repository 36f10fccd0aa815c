#include "annarc/skein.hpp"

#include <sstream>

#include "annarc/error.hpp"

namespace annarc {

Laurent Laurent::monomial(long long coeff, int power) {
  Laurent l;
  if (coeff != 0) l.terms_[power] = coeff;
  return l;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [p, c] : o.terms_) {
    long long& slot = terms_[p];
    slot += c;
    if (slot == 0) terms_.erase(p);
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out += Laurent::monomial(ca * cb, pa + pb);
  return out;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << (it->second < 0 ? " - " : " + ");
    else if (it->second < 0) os << "-";
    first = false;
    os << (it->second < 0 ? -it->second : it->second) << "A^" << it->first;
  }
  return os.str();
}

namespace {

Laurent power(const Laurent& base, int e) {
  Laurent out = Laurent::monomial(1, 0);
  for (int k = 0; k < e; ++k) out = out * base;
  return out;
}

}  // namespace

SkeinValue bracket(const FlatState& start, const TangleWord& w) {
  if (w.source() != start.arity()) {
    throw ArityError("word with source " + std::to_string(w.source()) + " applied to " +
                     std::to_string(start.arity()) + " strands");
  }
  std::map<FlatState, Laurent> states{{start, Laurent::monomial(1, 0)}};
  for (const Generator& g : w.tokens()) {
    std::map<FlatState, Laurent> next;
    for (const auto& [st, coeff] : states) {
      if (!g.is_crossing()) {
        FlatState s = st;
        s.apply(g);
        next[s] += coeff;
        continue;
      }
      const int smooth = g.kind == GenKind::CrossPos ? 1 : -1;
      FlatState turned = st;
      turned.apply(Generator::cap(g.strands, g.index));
      turned.apply(Generator::cup(g.strands, g.index));
      next[st] += coeff * Laurent::monomial(1, smooth);
      next[turned] += coeff * Laurent::monomial(1, -smooth);
    }
    states.clear();
    for (auto& [st, c] : next)
      if (!c.is_zero()) states.emplace(st, c);
  }
  Laurent delta = Laurent::monomial(-1, 2);
  delta += Laurent::monomial(-1, -2);
  SkeinValue out;
  for (const auto& [st, coeff] : states) {
    const int sh = st.shift();
    Laurent framing = Laurent::monomial(sh % 2 ? -1 : 1, 3 * sh);
    SkeinKey key{st.outer(), st.inner(), st.n1()};
    out[key] += coeff * power(delta, st.n0()) * framing;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

SkeinValue bracket(const TangleWord& w) { return bracket(FlatState(0), w); }

}  // namespace annarc
