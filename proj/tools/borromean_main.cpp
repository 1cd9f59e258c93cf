// Command-line front end: build, verify, classify and compare
// representations of the Borromean link group and their twisted Alexander
// polynomials.  All I/O is JSON; exit codes: 0 ok, 2 constraint violation,
// 3 parse/IO error, 4 mathematical inconsistency.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "brm/json_io.hpp"
#include "brm/sampling.hpp"
#include "brm/tap.hpp"

namespace {

using namespace brm;

struct Config {
  double tol = defaults::tol_abs;
  std::uint64_t seed = 0;
  std::string output;
  bool pretty = false;
};

void emit(const Config& cfg, const json& j) {
  std::string text = dump_json(j, cfg.pretty) + "\n";
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw ParseError("cannot open output file " + cfg.output, 0);
    out << text;
  }
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

json sample_json(const Representation& rho, double tol) {
  json j = to_json(rho);
  auto res = relation_residuals(rho.x1, rho.x2, rho.x3);
  j["residuals"] = {{"relation", {res[0], res[1], res[2]}},
                    {"implication", relation_implication_check(rho, 10.0 * tol)}};
  return j;
}

ComponentLabel pick_label(const Representation& rho, const CharacterTuple& c,
                          double tol) {
  if (rho.label.kind != ComponentKind::Custom &&
      component_membership(c, rho.label, tol))
    return rho.label;
  return classify(c, tol).front().label;
}

std::optional<cx> theta_for(const Representation& rho,
                            const CharacterTuple& c) {
  if (c.theta) return c.theta;
  try {
    return theta_from_character(c);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

json tap_both_json(const Representation& rho, int column, double tol) {
  CharacterTuple c = character_of(rho);
  ComponentLabel label = pick_label(rho, c, tol);
  if (label.kind == ComponentKind::X4 && !c.theta) c.theta = theta_for(rho, c);
  TapResult fox = tap_fox(rho, column, tol);
  TapResult closed = tap_closed(c, label, tol);
  UnitComparison cmp = equal_up_to_unit(fox.delta, closed.delta, tol);
  json j{{"fox", to_json(fox)}, {"closed", to_json(closed)}};
  j["match"] = cmp.equal;
  if (cmp.equal) {
    j["unit"] = {fox.unit[0] - closed.unit[0], fox.unit[1] - closed.unit[1],
                 fox.unit[2] - closed.unit[2]};
    j["scale"] = to_json(fox.scale / closed.scale);
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Irreducible SL(2,C) characters of the Borromean rings and their "
      "twisted Alexander polynomials"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--tol", cfg.tol, "absolute tolerance for checks");
  app.add_option("--seed", cfg.seed, "random seed for samplers");
  app.add_option("--output", cfg.output, "output file (default stdout)");
  app.add_flag("--pretty", cfg.pretty, "indent JSON output");
  // let the global options above appear after a subcommand name too
  app.fallthrough();

  // sample
  auto* sample = app.add_subcommand(
      "sample", "construct a representation on a chosen component");
  std::string component;
  sample->add_option("component", component, "X1+ X1- X2 X3 X4")->required();
  int comp_index = 1;
  sample->add_option("--i", comp_index, "component index 1..3");
  std::string kappa_prev_s, kappa_next_s;
  sample->add_option("--kappa-prev", kappa_prev_s,
                     "kappa of the lower-indexed diagonal generator (X2)");
  sample->add_option("--kappa-next", kappa_next_s,
                     "kappa of the higher-indexed diagonal generator (X2)");
  std::string ti_s, tprev_s, tnext_s, t123_s;
  sample->add_option("--t-i", ti_s, "t_i (X3)");
  sample->add_option("--t-prev", tprev_s, "trace of x_i x_{i-1} (X3)");
  sample->add_option("--t-next", tnext_s, "trace of x_i x_{i+1} (X3)");
  sample->add_option("--t123", t123_s, "t_123 (X3)");
  std::vector<std::string> t_s;
  sample->add_option("--t", t_s, "t1 t2 t3 (X4)")->expected(3);
  std::string theta_s;
  sample->add_option("--theta", theta_s, "theta (X4)");
  int theta_branch = -1;
  sample->add_option("--theta-branch", theta_branch,
                     "index into solve_theta roots (X4)");
  int kappa_branch = 0;
  sample->add_option("--kappa-branch", kappa_branch, "0 or 1 (X4)");
  int nsamples = 0;
  sample->add_option("--samples", nsamples, "emit N random samples");

  // verify / char / classify / tap
  auto* verify = app.add_subcommand("verify", "check a representation");
  std::string verify_path;
  verify->add_option("input", verify_path, "representation JSON")->required();

  auto* charc = app.add_subcommand("char", "trace coordinates of a representation");
  std::string char_path;
  charc->add_option("input", char_path, "representation JSON")->required();

  auto* classifyc = app.add_subcommand("classify", "components through a character");
  std::string classify_path;
  classifyc->add_option("input", classify_path, "character (or representation) JSON")
      ->required();

  auto* tap = app.add_subcommand("tap", "twisted Alexander polynomial");
  std::string tap_path, method = "both";
  int column = 3;
  bool all_columns = false;
  tap->add_option("input", tap_path, "representation JSON")->required();
  tap->add_option("--method", method, "fox | closed | both")
      ->check(CLI::IsMember({"fox", "closed", "both"}));
  tap->add_option("--column", column, "deleted Jacobian column 1..3");
  tap->add_flag("--all-columns", all_columns, "fox route for v = 1,2,3");

  // solve-theta / cover / holonomy
  auto* st = app.add_subcommand("solve-theta", "roots of the theta quartic");
  std::vector<std::string> st_t;
  st->add_option("--t", st_t, "t1 t2 t3")->required()->expected(3);

  auto* cover = app.add_subcommand("cover", "t3 fiber over (t1,t2,theta)");
  std::string cover_t1_s, cover_t2_s, cover_theta_s;
  cover->add_option("--t1", cover_t1_s)->required();
  cover->add_option("--t2", cover_t2_s)->required();
  cover->add_option("--theta", cover_theta_s)->required();

  auto* holo = app.add_subcommand(
      "holonomy", "the lifted holonomy representation (t1=t2=t3=2)");
  int epsilon = 1;
  holo->add_option("--epsilon", epsilon, "sign of theta = eps sqrt(-1)")
      ->check(CLI::IsMember({1, -1}));

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(sample)) {
    Rng rng(cfg.seed);
    auto label_of = [&](const std::string& name) -> ComponentLabel {
      if (name == "X1+") return {ComponentKind::X1Plus, comp_index};
      if (name == "X1-") return {ComponentKind::X1Minus, comp_index};
      if (name == "X2") return {ComponentKind::X2, comp_index};
      if (name == "X3") return {ComponentKind::X3, comp_index};
      if (name == "X4") return {ComponentKind::X4, 0};
      throw DomainError("unknown component '" + name + "'");
    };
    ComponentLabel label = label_of(component);
    if (nsamples > 0) {
      json arr = json::array();
      for (int k = 0; k < nsamples; ++k)
        arr.push_back(sample_json(sample_component(label, rng), cfg.tol));
      emit(cfg, arr);
      return 0;
    }
    Representation rho;
    if (label.kind == ComponentKind::X2 && !kappa_prev_s.empty()) {
      rho = realize_x2(comp_index, parse_complex(kappa_prev_s),
                       parse_complex(kappa_next_s), cfg.tol);
    } else if (label.kind == ComponentKind::X3 && !ti_s.empty()) {
      rho = realize_x3(comp_index, parse_complex(ti_s), parse_complex(tprev_s),
                       parse_complex(tnext_s), parse_complex(t123_s), cfg.tol);
    } else if (label.kind == ComponentKind::X4 && !t_s.empty()) {
      cx t1 = parse_complex(t_s[0]), t2 = parse_complex(t_s[1]),
         t3 = parse_complex(t_s[2]);
      cx theta;
      if (!theta_s.empty()) {
        theta = parse_complex(theta_s);
      } else {
        auto roots = solve_theta(t1, t2, t3, cfg.tol);
        int branch = theta_branch < 0 ? 0 : theta_branch;
        if (branch >= static_cast<int>(roots.size()))
          throw DomainError("theta branch index out of range");
        theta = roots[branch];
      }
      rho = realize_x4(t1, t2, t3, theta, kappa_branch, cfg.tol);
    } else {
      rho = sample_component(label, rng);
    }
    emit(cfg, sample_json(rho, cfg.tol));
    return 0;
  }

  if (app.got_subcommand(verify)) {
    Representation rho = representation_from_json(read_input(verify_path));
    VerificationReport rep = verify_representation(rho, cfg.tol);
    json j = to_json(rep, cfg.tol);
    j["xi_residual"] = xi_cross_check(rho);
    bool ok = rep.pass(cfg.tol);
    emit(cfg, j);
    return ok ? 0 : 4;
  }

  if (app.got_subcommand(charc)) {
    Representation rho = representation_from_json(read_input(char_path));
    emit(cfg, to_json(character_of(rho)));
    return 0;
  }

  if (app.got_subcommand(classifyc)) {
    json in = read_input(classify_path);
    CharacterTuple c = in.contains("x1")
                           ? character_of(representation_from_json(in))
                           : character_from_json(in);
    emit(cfg, to_json(classify(c, cfg.tol)));
    return 0;
  }

  if (app.got_subcommand(tap)) {
    Representation rho = representation_from_json(read_input(tap_path));
    if (all_columns) {
      json arr = json::array();
      TapResult results[3];
      for (int v = 1; v <= 3; ++v) {
        results[v - 1] = tap_fox(rho, v, cfg.tol);
        arr.push_back(to_json(results[v - 1]));
      }
      bool agree = true;
      for (int v = 0; v < 3; ++v)
        agree = agree && equal_up_to_unit(results[v].delta,
                                          results[(v + 1) % 3].delta, cfg.tol)
                             .equal;
      emit(cfg, json{{"results", arr}, {"columns_agree", agree}});
      return agree ? 0 : 4;
    }
    if (method == "fox") {
      emit(cfg, to_json(tap_fox(rho, column, cfg.tol)));
      return 0;
    }
    if (method == "closed") {
      CharacterTuple c = character_of(rho);
      ComponentLabel label = pick_label(rho, c, cfg.tol);
      if (label.kind == ComponentKind::X4 && !c.theta)
        c.theta = theta_for(rho, c);
      emit(cfg, to_json(tap_closed(c, label, cfg.tol)));
      return 0;
    }
    json j = tap_both_json(rho, column, cfg.tol);
    emit(cfg, j);
    return j["match"].get<bool>() ? 0 : 4;
  }

  if (app.got_subcommand(st)) {
    auto roots = solve_theta(parse_complex(st_t[0]), parse_complex(st_t[1]),
                             parse_complex(st_t[2]), cfg.tol);
    json arr = json::array();
    for (const cx& th : roots) arr.push_back(to_json(th));
    emit(cfg, json{{"theta", arr}});
    return 0;
  }

  if (app.got_subcommand(cover)) {
    auto [a, b] = cover_t3(parse_complex(cover_t1_s), parse_complex(cover_t2_s),
                           parse_complex(cover_theta_s), cfg.tol);
    emit(cfg, json{{"t3", {to_json(a), to_json(b)}}});
    return 0;
  }

  if (app.got_subcommand(holo)) {
    cx theta{0.0, static_cast<double>(epsilon)};
    Representation rho = realize_x4(2.0, 2.0, 2.0, theta, 0, cfg.tol);
    CharacterTuple c = character_of(rho);
    json j{{"representation", sample_json(rho, cfg.tol)},
           {"character", to_json(c)}};
    TapResult fox = tap_fox(rho, 3, cfg.tol);
    TapResult closed = tap_closed(c, {ComponentKind::X4, 0}, cfg.tol);
    j["tap_fox"] = to_json(fox);
    j["tap_closed"] = to_json(closed);
    j["match"] = equal_up_to_unit(fox.delta, closed.delta, cfg.tol).equal;
    SpanInfo span = span_degree(fox.delta);
    j["spans"] = {span.per_variable[0], span.per_variable[1],
                  span.per_variable[2]};
    j["total_span"] = span.total;
    emit(cfg, j);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const brm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const brm::NotDivisibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const brm::LabelMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const brm::UnclassifiedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const brm::MissingThetaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const brm::ZeroPolynomialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const brm::Error& e) {
    // domain, constraint, reducible, degenerate, excluded-hypersurface
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
