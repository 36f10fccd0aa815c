#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "annarc/arc_algebra.hpp"
#include "annarc/error.hpp"
#include "annarc/json_io.hpp"
#include "annarc/rewrite.hpp"
#include "annarc/verify.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace annarc;

namespace {

HomSpace space(const std::string& alpha, const std::string& beta) { return HomSpace(from_signs(alpha), from_signs(beta)); }

}  // namespace

PYBIND11_MODULE(_annarc, m) {
  m.doc() = "Affine tangle words, crossingless matchings and the annular arc algebra";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (e.kind() + ": " + e.what()).c_str());
    }
  });

  m.def("enumerate", [](int n) {
    std::vector<std::string> out;
    for (const auto& a : enumerate(n)) out.push_back(to_signs(a));
    return out;
  }, py::arg("n"));
  m.def("matching_json", [](const std::string& signs) { return to_json(from_signs(signs)).dump(); }, py::arg("signs"));
  m.def("evaluate_json", [](const std::string& word) { return to_json(evaluate_word(parse_word(word))).dump(); },
        py::arg("word"));
  m.def("hom_json", [](const std::string& a, const std::string& b) { return to_json(space(a, b)).dump(); },
        py::arg("alpha"), py::arg("beta"));
  m.def("basis", [](const std::string& a, const std::string& b) {
    std::vector<std::string> out;
    for (const Tensor& t : space(a, b).basis()) out.push_back(format_tensor(t));
    return out;
  }, py::arg("alpha"), py::arg("beta"));
  m.def("compose_json",
        [](const std::string& a, const std::string& b, const std::string& c, const std::string& x, const std::string& y,
           const std::string& coaction) {
          const HomElement ex = parse_element(space(a, b), x), ey = parse_element(space(b, c), y);
          return product_json(ex, ey, compose(ex, ey, {coaction_from_name(coaction), {}})).dump();
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("x"), py::arg("y"), py::arg("coaction") = "paper");
  m.def("eliminate_crossings", [](const std::string& word, int budget) {
    return format_word(eliminate_crossings(parse_word(word), budget));
  }, py::arg("word"), py::arg("budget") = 10000);
  m.def("rewrites", [](const std::string& word) {
    const TangleWord w = parse_word(word);
    std::vector<std::tuple<std::string, std::size_t, std::string, std::string>> out;
    for (const Rewrite& r : applicable_rewrites(w))
      out.emplace_back(rule_name(r.rule), r.position, r.direction == Direction::Forward ? "forward" : "reverse",
                       format_word(rewrite(w, r)));
    return out;
  }, py::arg("word"));
  m.def("verify_json", [](const std::string& suite, int n, const std::string& coaction) {
    VerifyOptions opt;
    opt.n = n;
    opt.coaction = coaction_from_name(coaction);
    return run_suite(suite, opt).report.dump();
  }, py::arg("suite"), py::arg("n"), py::arg("coaction") = "paper");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
