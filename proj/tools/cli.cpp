#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "annarc/arc_algebra.hpp"
#include "annarc/error.hpp"
#include "annarc/json_io.hpp"
#include "annarc/rewrite.hpp"
#include "annarc/verify.hpp"

namespace annarc::cli {

namespace {

struct Flags {
  std::optional<int> n;
  std::string alpha, beta, gamma, x, y, word, out, suite;
  std::string format;
  std::string coaction = "paper";
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

AffineMatching matching_flag(const std::string& name, const std::string& signs, const Flags& f) {
  if (signs.empty() && !(f.n && *f.n == 0)) throw UsageError("--" + name + " is required");
  if (f.n && static_cast<int>(signs.size()) != 2 * *f.n)
    throw UsageError("--" + name + " has " + std::to_string(signs.size()) + " signs, expected " +
                     std::to_string(2 * *f.n));
  return from_signs(signs);
}

void require_n(const Flags& f) {
  if (!f.n) throw UsageError("--n is required");
  if (*f.n < 0) throw UsageError("--n must be non-negative");
}

void require(const std::string& value, const std::string& name) {
  if (value.empty()) throw UsageError("--" + name + " is required");
}

struct Output {
  Json doc;
  std::string text;
};

Output matchings(const Flags& f) {
  require_n(f);
  Output o{Json::array(), {}};
  for (const auto& m : enumerate(*f.n)) {
    o.doc.push_back(to_json(m));
    o.text += to_signs(m) + "\n";
  }
  return o;
}

Output hom(const Flags& f) {
  const HomSpace h(matching_flag("alpha", f.alpha, f), matching_flag("beta", f.beta, f));
  Output o{to_json(h), {}};
  o.text = "n0 " + std::to_string(h.n0()) + "\nn1 " + std::to_string(h.n1()) + "\n";
  for (const Tensor& t : h.basis()) o.text += format_tensor(t) + " " + std::to_string(h.degree(t)) + "\n";
  return o;
}

Output compose_cmd(const Flags& f) {
  const AffineMatching a = matching_flag("alpha", f.alpha, f), b = matching_flag("beta", f.beta, f),
                       c = matching_flag("gamma", f.gamma, f);
  require(f.x, "x");
  require(f.y, "y");
  if (a.n() != b.n() || b.n() != c.n()) throw UsageError("--alpha, --beta and --gamma differ in size");
  const HomElement x = parse_element(HomSpace(a, b), f.x), y = parse_element(HomSpace(b, c), f.y);
  const HomElement xy = compose(x, y, {coaction_from_name(f.coaction), {}});
  return {product_json(x, y, xy), xy.str() + "\n"};
}

Output mult_table(const Flags& f) {
  require_n(f);
  const ComposeOptions co{coaction_from_name(f.coaction), {}};
  const auto all = enumerate(*f.n);
  Output o{Json::array(), {}};
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        const HomSpace xs(a, b), ys(b, c);
        for (const Tensor& s : xs.basis())
          for (const Tensor& t : ys.basis()) {
            const HomElement x(xs, s), y(ys, t);
            const HomElement xy = compose(x, y, co);
            if (xy.is_zero()) continue;
            o.doc.push_back(product_json(x, y, xy));
            o.text += to_signs(a) + " " + to_signs(b) + " " + to_signs(c) + " " + format_tensor(s) + " " +
                      format_tensor(t) + " -> " + xy.str() + "\n";
          }
      }
  return o;
}

Output evaluate(const Flags& f) {
  require(f.word, "word");
  TangleWord w = parse_word(f.word);
  if (w.crossing_count() > 0) w = eliminate_crossings(w);
  const EvaluationResult r = evaluate_word(w);
  Output o{to_json(r), {}};
  o.text = "signs " + to_signs(r.matching) + "\nn0 " + std::to_string(r.n0) + "\nn1 " + std::to_string(r.n1) +
           "\nshift " + std::to_string(r.shift) + "\n";
  return o;
}

int default_size(const std::string& suite) {
  if (suite == "relations") return 8;
  if (suite == "oracle") return 4;
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine tangles, crossingless matchings and the annular arc algebra", "annarc"};
  app.require_subcommand(1);
  Flags f;
  const std::vector<std::string> formats{"json", "text"}, coactions{"paper", "homogeneous"};

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--format", f.format, "json or text")->check(CLI::IsMember(formats));
    cmd->add_option("--out", f.out, "write the document to FILE");
  };
  auto sizes = [&](CLI::App* cmd) { cmd->add_option("--n", f.n, "half the number of points"); };
  auto signs = [&](CLI::App* cmd, std::initializer_list<std::pair<const char*, std::string*>> names) {
    for (auto [name, target] : names) cmd->add_option(std::string("--") + name, *target, "sign string");
  };
  auto coaction = [&](CLI::App* cmd) {
    cmd->add_option("--coaction", f.coaction, "paper or homogeneous")->check(CLI::IsMember(coactions));
  };

  CLI::App* c_match = app.add_subcommand("matchings", "list the crossingless matchings of size n");
  sizes(c_match);
  common(c_match);
  CLI::App* c_hom = app.add_subcommand("hom", "graded dimensions of Hom(alpha, beta)");
  sizes(c_hom);
  signs(c_hom, {{"alpha", &f.alpha}, {"beta", &f.beta}});
  common(c_hom);
  CLI::App* c_comp = app.add_subcommand("compose", "product of basis tensors x and y");
  sizes(c_comp);
  signs(c_comp, {{"alpha", &f.alpha}, {"beta", &f.beta}, {"gamma", &f.gamma}});
  c_comp->add_option("--x", f.x, "tensor in Hom(alpha, beta)");
  c_comp->add_option("--y", f.y, "tensor in Hom(beta, gamma)");
  coaction(c_comp);
  common(c_comp);
  CLI::App* c_table = app.add_subcommand("mult-table", "every nonzero product of basis tensors");
  sizes(c_table);
  coaction(c_table);
  common(c_table);
  CLI::App* c_eval = app.add_subcommand("evaluate", "matching, loop counts and shift of a word");
  c_eval->add_option("--word", f.word, "tangle word");
  common(c_eval);
  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  sizes(c_verify);
  c_verify->add_option("--suite", f.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  coaction(c_verify);
  common(c_verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << "\n";
    return 1;
  }

  try {
    const bool verify = c_verify->parsed();
    if (f.format.empty()) f.format = verify ? "text" : "json";
    Output o;
    int code = 0;
    if (c_match->parsed()) o = matchings(f);
    else if (c_hom->parsed()) o = hom(f);
    else if (c_comp->parsed()) o = compose_cmd(f);
    else if (c_table->parsed()) o = mult_table(f);
    else if (c_eval->parsed()) o = evaluate(f);
    else {
      if (f.n && *f.n < 0) throw UsageError("--n must be non-negative");
      VerifyOptions opt;
      opt.n = f.n.value_or(default_size(f.suite));
      opt.coaction = coaction_from_name(f.coaction);
      SuiteReport r = run_suite(f.suite, opt);
      code = r.passed ? 0 : 2;
      o.doc = std::move(r.report);
      o.text = std::string(r.passed ? "PASS" : "FAIL") + " " + f.suite + " n=" + std::to_string(opt.n) + " failures=" +
               std::to_string(o.doc["failures"].get<long>()) + "\n";
    }
    const std::string body = f.format == "json" ? o.doc.dump() + "\n" : o.text;
    if (f.out.empty()) {
      out << body;
    } else {
      std::ofstream file(f.out, std::ios::binary);
      if (!file) throw UsageError("cannot write " + f.out);
      file << body;
      if (verify && f.format == "json") out << o.text;
    }
    return code;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "UsageError: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace annarc::cli
