#include "annarc/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "annarc/error.hpp"

namespace annarc {

int Generator::source() const {
  switch (kind) {
    case GenKind::Cup:
      return strands - 2;
    default:
      return strands;
  }
}

int Generator::target() const {
  switch (kind) {
    case GenKind::Cap:
      return strands - 2;
    default:
      return strands;
  }
}

void validate(const Generator& g) {
  auto fail = [&](const std::string& why) {
    throw IndexError("token " + to_string(g) + ": " + why);
  };
  switch (g.kind) {
    case GenKind::Cup:
    case GenKind::Cap:
    case GenKind::CrossPos:
    case GenKind::CrossNeg:
      if (g.strands < 2) fail("needs at least 2 strands");
      if (g.index < 1 || g.index > g.strands - 1) fail("index outside 1..n-1");
      break;
    case GenKind::TwistPos:
    case GenKind::TwistNeg:
      if (g.strands < 1) fail("needs at least 1 strand");
      if (g.index < 1 || g.index > g.strands) fail("index outside 1..n");
      break;
    case GenKind::RotCCW:
    case GenKind::RotCW:
      if (g.strands < 1) fail("needs at least 1 strand");
      if (g.index != 0) fail("rotations take no index");
      break;
    case GenKind::Id:
      if (g.strands < 0) fail("negative arity");
      break;
  }
}

bool is_valid(const Generator& g) {
  switch (g.kind) {
    case GenKind::Cup:
    case GenKind::Cap:
    case GenKind::CrossPos:
    case GenKind::CrossNeg:
      return g.strands >= 2 && g.index >= 1 && g.index <= g.strands - 1;
    case GenKind::TwistPos:
    case GenKind::TwistNeg:
      return g.strands >= 1 && g.index >= 1 && g.index <= g.strands;
    case GenKind::RotCCW:
    case GenKind::RotCW:
      return g.strands >= 1 && g.index == 0;
    case GenKind::Id:
      return g.strands >= 0;
  }
  return false;
}

std::string to_string(const Generator& g) {
  std::ostringstream os;
  auto pair = [&](const char* name) { os << name << '(' << g.strands << ',' << g.index << ')'; };
  switch (g.kind) {
    case GenKind::Cup: pair("g"); break;
    case GenKind::Cap: pair("f"); break;
    case GenKind::CrossPos: pair("t+"); break;
    case GenKind::CrossNeg: pair("t-"); break;
    case GenKind::TwistPos: pair("w+"); break;
    case GenKind::TwistNeg: pair("w-"); break;
    case GenKind::RotCCW: os << "r(" << g.strands << ')'; break;
    case GenKind::RotCW: os << "r'(" << g.strands << ')'; break;
    case GenKind::Id: os << "id(" << g.strands << ')'; break;
  }
  return os.str();
}

namespace {
int first_source(const std::vector<Generator>& tokens) {
  return tokens.empty() ? 0 : tokens.front().source();
}
}  // namespace

TangleWord::TangleWord(std::vector<Generator> tokens) : TangleWord(first_source(tokens), tokens) {}

TangleWord::TangleWord(int source, std::vector<Generator> tokens) : source_(source) {
  if (source < 0) throw ArityError("negative arity " + std::to_string(source));
  int arity = source;
  tokens_.reserve(tokens.size());
  for (const auto& g : tokens) {
    validate(g);
    if (g.source() != arity) {
      throw ArityError("token " + to_string(g) + " expects arity " + std::to_string(g.source()) +
                       " but the word has arity " + std::to_string(arity));
    }
    arity = g.target();
    if (g.kind != GenKind::Id) tokens_.push_back(g);
  }
  target_ = arity;
}

TangleWord TangleWord::identity(int arity) { return TangleWord(arity, {}); }

bool TangleWord::is_flat() const { return crossing_count() == 0; }

int TangleWord::crossing_count() const {
  return static_cast<int>(
      std::count_if(tokens_.begin(), tokens_.end(), [](const Generator& g) { return g.is_crossing(); }));
}

int TangleWord::arity_at(std::size_t pos) const {
  if (pos == 0) return source_;
  return tokens_.at(pos - 1).target();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  TangleWord parse() {
    if (s_.rfind("id(", 0) == 0) {
      pos_ = 3;
      int m = nat();
      expect(')');
      if (pos_ != s_.size()) error("trailing input after id(...)");
      return TangleWord::identity(m);
    }
    std::vector<Generator> out;
    if (s_.empty()) error("empty word");
    while (true) {
      gen(out);
      if (pos_ == s_.size()) break;
      expect(';');
    }
    return TangleWord(out);
  }

 private:
  [[noreturn]] void error(const std::string& why) const {
    throw SyntaxError(why + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  bool accept(std::string_view lit) {
    if (s_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  int nat() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{} || ptr == s_.data() + pos_) error("expected a natural number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

  void gen(std::vector<Generator>& out) {
    GenKind kind;
    bool indexed = true;
    if (accept("t+(")) kind = GenKind::CrossPos;
    else if (accept("t-(")) kind = GenKind::CrossNeg;
    else if (accept("w+(")) kind = GenKind::TwistPos;
    else if (accept("w-(")) kind = GenKind::TwistNeg;
    else if (accept("g(")) kind = GenKind::Cup;
    else if (accept("f(")) kind = GenKind::Cap;
    else if (accept("r'(")) { kind = GenKind::RotCW; indexed = false; }
    else if (accept("r(")) { kind = GenKind::RotCCW; indexed = false; }
    else error("unknown generator");

    int n = nat();
    int i = 0;
    if (indexed) {
      expect(',');
      i = nat();
    }
    expect(')');
    emit(out, Generator{kind, n, i});
  }

  // Index n on cups, caps and crossings denotes the rotation conjugate of
  // index n-1.
  static void emit(std::vector<Generator>& out, Generator g) {
    const bool wraps = (g.kind == GenKind::Cup || g.kind == GenKind::Cap || g.is_crossing()) &&
                       g.strands >= 2 && g.index == g.strands;
    if (!wraps) {
      out.push_back(g);
      return;
    }
    const int n = g.strands;
    Generator inner = g;
    inner.index = n - 1;
    switch (g.kind) {
      case GenKind::Cup:
        if (n - 2 > 0) out.push_back(Generator::rot(n - 2));
        out.push_back(inner);
        out.push_back(Generator::rot_inv(n));
        break;
      case GenKind::Cap:
        out.push_back(Generator::rot(n));
        out.push_back(inner);
        if (n - 2 > 0) out.push_back(Generator::rot_inv(n - 2));
        break;
      default:
        out.push_back(Generator::rot(n));
        out.push_back(inner);
        out.push_back(Generator::rot_inv(n));
        break;
    }
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

TangleWord parse_word(std::string_view text) { return Parser(text).parse(); }

std::string format_word(const TangleWord& w) {
  if (w.empty()) return "id(" + std::to_string(w.source()) + ")";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "; ";
    out += to_string(w.tokens()[k]);
  }
  return out;
}

TangleWord compose(const TangleWord& w1, const TangleWord& w2) {
  if (w1.target() != w2.source()) {
    throw ArityError("cannot compose a word with target " + std::to_string(w1.target()) +
                     " and a word with source " + std::to_string(w2.source()));
  }
  std::vector<Generator> tokens = w1.tokens();
  tokens.insert(tokens.end(), w2.tokens().begin(), w2.tokens().end());
  return TangleWord(w1.source(), std::move(tokens));
}

TangleWord dual(const TangleWord& w) {
  std::vector<Generator> tokens;
  tokens.reserve(w.size());
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it) {
    Generator g = *it;
    switch (g.kind) {
      case GenKind::Cup: g.kind = GenKind::Cap; break;
      case GenKind::Cap: g.kind = GenKind::Cup; break;
      case GenKind::CrossPos: g.kind = GenKind::CrossNeg; break;
      case GenKind::CrossNeg: g.kind = GenKind::CrossPos; break;
      case GenKind::TwistPos: g.kind = GenKind::TwistNeg; break;
      case GenKind::TwistNeg: g.kind = GenKind::TwistPos; break;
      case GenKind::RotCCW: g.kind = GenKind::RotCW; break;
      case GenKind::RotCW: g.kind = GenKind::RotCCW; break;
      case GenKind::Id: break;
    }
    tokens.push_back(g);
  }
  return TangleWord(w.target(), std::move(tokens));
}

}  // namespace annarc
