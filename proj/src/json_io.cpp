#include "annarc/json_io.hpp"

namespace annarc {

Json to_json(const AffineMatching& m) {
  Json arcs = Json::array();
  for (const Arc& a : m.arcs()) arcs.push_back({a.plus, a.minus, a.seam});
  return Json{{"n", m.n()}, {"signs", to_signs(m)}, {"arcs", std::move(arcs)}};
}

Json to_json(const EvaluationResult& r) {
  return Json{{"signs", to_signs(r.matching)}, {"n0", r.n0}, {"n1", r.n1}, {"shift", r.shift}};
}

Json to_json(const HomSpace& h) {
  Json dims = Json::object();
  for (const auto& [deg, dim] : h.dims()) dims[std::to_string(deg)] = dim;
  return Json{{"n0", h.n0()}, {"n1", h.n1()}, {"dims", std::move(dims)}};
}

Json terms_json(const HomElement& x) {
  Json out = Json::array();
  for (const auto& [t, c] : x.terms()) out.push_back({{"basis", format_tensor(t)}, {"coeff", to_string(c)}});
  return out;
}

Json product_json(const HomElement& x, const HomElement& y, const HomElement& xy) {
  auto single = [](const HomElement& e) {
    return e.terms().size() == 1 ? format_tensor(e.terms().begin()->first) : e.str();
  };
  return Json{{"n", x.space().n()},
              {"alpha", to_signs(x.space().alpha())},
              {"beta", to_signs(x.space().beta())},
              {"gamma", to_signs(y.space().beta())},
              {"x", single(x)},
              {"y", single(y)},
              {"result", terms_json(xy)}};
}

HomElement parse_element(const HomSpace& space, std::string_view text) {
  return HomElement(space, parse_tensor(text));
}

}  // namespace annarc
