#include "annarc/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "annarc/geometry.hpp"
#include "annarc/rewrite.hpp"

namespace annarc {

namespace {

std::vector<HomElement> basis_elements(const AffineMatching& a, const AffineMatching& b) {
  const HomSpace h(a, b);
  std::vector<HomElement> out;
  for (const Tensor& t : h.basis()) out.emplace_back(h, t);
  return out;
}

std::string single(const HomElement& x) { return format_tensor(x.terms().begin()->first); }

SuiteReport finish(Json report, long failures) {
  report["failures"] = failures;
  report["passed"] = failures == 0;
  return {failures == 0, std::move(report)};
}

}  // namespace

std::string coaction_name(Coaction c) { return c == Coaction::Paper ? "paper" : "homogeneous"; }

Coaction coaction_from_name(std::string_view name) {
  if (name == "paper") return Coaction::Paper;
  if (name == "homogeneous") return Coaction::Homogeneous;
  throw std::invalid_argument("unknown coaction \"" + std::string(name) + "\"");
}

std::vector<std::pair<std::vector<int>, LoopClass>> seam_loops(const AffineMatching& alpha,
                                                               const AffineMatching& beta) {
  std::vector<std::pair<std::vector<int>, LoopClass>> out;
  std::vector<bool> seen(beta.points() + 1, false);
  for (int start = 1; start <= beta.points(); ++start) {
    if (seen[start]) continue;
    std::vector<int> pts;
    int seam = 0, p = start;
    do {
      const int q = beta.partner(p);
      seam += beta.seam_from(p) + alpha.seam_from(q);
      seen[p] = seen[q] = true;
      pts.push_back(p);
      pts.push_back(q);
      p = alpha.partner(q);
    } while (p != start);
    std::sort(pts.begin(), pts.end());
    out.emplace_back(std::move(pts), seam == 0 ? LoopClass::Trivial : LoopClass::Essential);
  }
  return out;
}

SuiteReport verify_relations(const VerifyOptions& opt) {
  const int max_arity = std::max(opt.n, 1);
  long instances = 0, failures = 0;
  Json per_rule = Json::object(), examples = Json::array();
  for (RuleId id : all_rules()) {
    long count = 0;
    for (const RuleInstance& inst : rule_instances(id, max_arity)) {
      ++count;
      if (!check_relation(inst, opt.contexts)) {
        if (static_cast<int>(examples.size()) < opt.max_examples)
          examples.push_back({{"rule", rule_name(id)}, {"lhs", format_word(inst.lhs)}, {"rhs", format_word(inst.rhs)}});
        ++failures;
      }
    }
    per_rule[std::string(rule_name(id))] = count;
    instances += count;
  }
  return finish(Json{{"suite", "relations"},
                     {"max_arity", max_arity},
                     {"contexts", opt.contexts},
                     {"instances", instances},
                     {"per_rule", std::move(per_rule)},
                     {"examples", std::move(examples)}},
                failures);
}

SuiteReport verify_associativity(const VerifyOptions& opt) {
  const ComposeOptions co{opt.coaction, {}};
  const auto all = enumerate(opt.n);
  long quadruples = 0, checks = 0, failures = 0, products = 0, nonzero = 0, inhomogeneous = 0;
  Json examples = Json::array();
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        const auto xs = basis_elements(a, b), ys = basis_elements(b, c);
        std::vector<std::vector<HomElement>> xy;
        for (const auto& x : xs) {
          xy.emplace_back();
          for (const auto& y : ys) {
            xy.back().push_back(compose(x, y, co));
            ++products;
            const HomElement& p = xy.back().back();
            if (p.is_zero()) continue;
            ++nonzero;
            const auto d = degree(p);
            if (!d || *d != *degree(x) + *degree(y)) ++inhomogeneous;
          }
        }
        for (const auto& d : all) {
          ++quadruples;
          const auto zs = basis_elements(c, d);
          for (std::size_t j = 0; j < ys.size(); ++j)
            for (const auto& z : zs) {
              const HomElement yz = compose(ys[j], z, co);
              for (std::size_t i = 0; i < xs.size(); ++i) {
                ++checks;
                const HomElement left = compose(xy[i][j], z, co), right = compose(xs[i], yz, co);
                if (left == right) continue;
                if (static_cast<int>(examples.size()) < opt.max_examples)
                  examples.push_back({{"alpha", to_signs(a)},
                                      {"beta", to_signs(b)},
                                      {"gamma", to_signs(c)},
                                      {"delta", to_signs(d)},
                                      {"x", single(xs[i])},
                                      {"y", single(ys[j])},
                                      {"z", single(z)},
                                      {"left", left.str()},
                                      {"right", right.str()}});
                ++failures;
              }
            }
        }
      }
  return finish(Json{{"suite", "associativity"},
                     {"n", opt.n},
                     {"coaction", coaction_name(opt.coaction)},
                     {"quadruples", quadruples},
                     {"checks", checks},
                     {"degree", {{"products", products}, {"nonzero", nonzero}, {"inhomogeneous", inhomogeneous}}},
                     {"examples", std::move(examples)}},
                failures);
}

SuiteReport verify_rotation(const VerifyOptions& opt) {
  long elements = 0, failures = 0;
  Json examples = Json::array();
  for (int k = 1; k <= opt.n; ++k) {
    const auto all = enumerate(k);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const HomElement& x : basis_elements(a, b)) {
          ++elements;
          HomElement y = x;
          for (int step = 0; step < 2 * k; ++step) y = rotate(y);
          if (y == x && rotate(x).space().dims() == x.space().dims()) continue;
          if (static_cast<int>(examples.size()) < opt.max_examples)
            examples.push_back({{"alpha", to_signs(a)}, {"beta", to_signs(b)}, {"x", single(x)}, {"image", y.str()}});
          ++failures;
        }
  }
  return finish(Json{{"suite", "rotation"}, {"n", opt.n}, {"elements", elements}, {"examples", std::move(examples)}},
                failures);
}

SuiteReport verify_order_independence(const VerifyOptions& opt) {
  long compositions = 0, orders = 0, failures = 0;
  Json examples = Json::array();
  for (int k = 1; k <= opt.n; ++k) {
    const auto all = enumerate(k);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto alternatives = all_orders(b);
        for (const auto& c : all)
          for (const HomElement& x : basis_elements(a, b))
            for (const HomElement& y : basis_elements(b, c)) {
              ++compositions;
              const HomElement first = compose(x, y, {opt.coaction, alternatives.front()});
              for (std::size_t o = 1; o < alternatives.size(); ++o) {
                ++orders;
                const HomElement other = compose(x, y, {opt.coaction, alternatives[o]});
                if (other == first) continue;
                if (static_cast<int>(examples.size()) < opt.max_examples)
                  examples.push_back({{"alpha", to_signs(a)},
                                      {"beta", to_signs(b)},
                                      {"gamma", to_signs(c)},
                                      {"x", single(x)},
                                      {"y", single(y)},
                                      {"order", alternatives[o]},
                                      {"result", other.str()},
                                      {"expected", first.str()}});
                ++failures;
              }
            }
      }
  }
  return finish(Json{{"suite", "order-independence"},
                     {"n", opt.n},
                     {"coaction", coaction_name(opt.coaction)},
                     {"compositions", compositions},
                     {"alternative_orders", orders},
                     {"examples", std::move(examples)}},
                failures);
}

SuiteReport verify_oracle(const VerifyOptions& opt) {
  long pairs = 0, loops = 0, failures = 0;
  Json examples = Json::array();
  for (int k = 1; k <= opt.n; ++k) {
    const auto all = enumerate(k);
    for (const auto& a : all)
      for (const auto& b : all) {
        ++pairs;
        const auto combinatorial = seam_loops(a, b);
        const LoopData ld = extract_loops(embed_pair(a, b));
        const EvaluationResult ev = evaluate_word(closure_word(a, b));
        bool ok = ld.arcs.empty() && ld.loops.size() == combinatorial.size() &&
                  ld.count(LoopClass::Trivial) == ev.n0 && ld.count(LoopClass::Essential) == ev.n1;
        const HomSpace h(a, b);
        for (std::size_t i = 0; ok && i < combinatorial.size(); ++i) {
          ++loops;
          const auto it = std::find(h.loop_points().begin(), h.loop_points().end(), combinatorial[i].first);
          ok = it != h.loop_points().end() && h.loops()[it - h.loop_points().begin()] == combinatorial[i].second;
        }
        if (ok) continue;
        if (static_cast<int>(examples.size()) < opt.max_examples)
          examples.push_back({{"alpha", to_signs(a)}, {"beta", to_signs(b)}});
        ++failures;
      }
  }
  return finish(
      Json{{"suite", "oracle"}, {"n", opt.n}, {"pairs", pairs}, {"loops", loops}, {"examples", std::move(examples)}},
      failures);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "associativity", "rotation", "order-independence",
                                              "oracle"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opt) {
  if (name == "relations") return verify_relations(opt);
  if (name == "associativity") return verify_associativity(opt);
  if (name == "rotation") return verify_rotation(opt);
  if (name == "order-independence") return verify_order_independence(opt);
  if (name == "oracle") return verify_oracle(opt);
  throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace annarc
