// renflow: exact Hopf-algebraic renormalization on rooted trees.
//
// Subcommands:
//   enumerate          forests up to a degree
//   coproduct          Hopf data (coproduct, reduced coproduct, antipode)
//   normal-coords      normal coordinates of the trees
//   birkhoff           factorization of a character
//   locality           counterterm scale-dependence report
//   beta               beta function of a local character
//   renormalized       renormalized character
//   lax-run            flow families phi | chi | tau | xi
//   toy-table          the toy character on the normal coordinates
//   reproduce-section8 diff all reference-table quantities
//   verify             structural suites / the acceptance criteria
//
// Exit codes: 0 success, 1 check failure, 2 configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "renflow/golden.hpp"
#include "renflow/json_io.hpp"
#include "renflow/verify.hpp"

namespace {

using namespace renflow;

struct Scenario {
  std::string character = "toy";  // "toy" or a path to a character dump
  std::string kind = "phi";
  int m = 0;
  int n = 0;
  int degree = 4;
  int trunc = 3;
  std::string format = "json";
  std::string out;
};

void emit(const Scenario& sc, const std::string& text) {
  if (sc.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(sc.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + sc.out);
  f << text;
}

Character load_character(const Scenario& sc) {
  if (sc.character == "toy") {
    return toy_character(ToyConfig{sc.degree, sc.trunc});
  }
  std::ifstream f(sc.character);
  if (!f) throw ConfigError("cannot read character file " + sc.character);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return character_from_json(text);
}

int exp_trunc_for(const Scenario& sc) {
  return toy_internal_trunc(ToyConfig{sc.degree, sc.trunc}) + 2 * sc.degree;
}

void validate(const Scenario& sc) {
  if (sc.degree < 1 || sc.degree > 15) {
    throw ConfigError("degree must lie in 1..15");
  }
  if (sc.trunc < 1 || sc.trunc > 16) {
    throw ConfigError("trunc must lie in 1..16");
  }
}

std::string character_report(const Character& phi, const Scenario& sc) {
  // reports show the requested window even when the internal computation
  // kept more coefficients
  Character view = Character::from_tree_fn(
      [phi, trunc = sc.trunc](const RootedTree& t) { return clip(phi(t), trunc); });
  if (sc.format == "json") return character_to_json(view, sc.degree, 2);
  std::ostringstream out;
  for (const auto& t : enumerate_trees(sc.degree)) {
    out << t.encoding() << " = " << view(t).to_string() << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic renormalization flows on rooted trees"};
  app.require_subcommand(1);

  Scenario sc;

  auto add_common = [&](CLI::App* cmd, bool with_flow = false) {
    cmd->add_option("--degree", sc.degree, "largest tree degree");
    cmd->add_option("--trunc", sc.trunc, "holomorphic truncation order");
    cmd->add_option("--format", sc.format)->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", sc.out, "output path (default stdout)");
    cmd->add_option("--character", sc.character, "toy or a character dump file");
    if (with_flow) {
      cmd->add_option("--kind", sc.kind)->check(CLI::IsMember({"phi", "chi", "tau", "xi"}));
      cmd->add_option("--m", sc.m);
      cmd->add_option("--n", sc.n);
    }
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list forests up to a degree");
  add_common(enumerate_cmd);

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Hopf data of one forest");
  std::string forest_arg = "[]";
  coproduct_cmd->add_option("forest", forest_arg, "bracket encoding, e.g. [[][]]");
  add_common(coproduct_cmd);

  auto* nc_cmd = app.add_subcommand("normal-coords", "normal coordinates of the trees");
  add_common(nc_cmd);

  auto* birkhoff_cmd = app.add_subcommand("birkhoff", "minimal-subtraction factorization");
  add_common(birkhoff_cmd);

  auto* locality_cmd = app.add_subcommand("locality", "counterterm scale dependence");
  add_common(locality_cmd);

  auto* beta_cmd = app.add_subcommand("beta", "beta function of a local character");
  add_common(beta_cmd);

  auto* ren_cmd = app.add_subcommand("renormalized", "renormalized character");
  add_common(ren_cmd);

  auto* lax_cmd = app.add_subcommand("lax-run", "flow families");
  add_common(lax_cmd, true);

  auto* toy_cmd = app.add_subcommand("toy-table", "toy character table");
  add_common(toy_cmd);

  auto* repro_cmd = app.add_subcommand("reproduce-section8", "diff the reference tables");
  add_common(repro_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run check suites");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite,
                         "hopf|character|birkhoff|lax|double|acceptance|all");
  add_common(verify_cmd);

  auto* sc_cmd = app.add_subcommand("structure-constants", "cutoff bracket constants");
  add_common(sc_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    validate(sc);

    if (enumerate_cmd->parsed()) {
      auto forests = enumerate_forests(sc.degree);
      if (sc.format == "json") {
        emit(sc, forests_to_json(forests, 2));
      } else {
        std::ostringstream out;
        for (const auto& f : forests) {
          out << (f.is_empty() ? "1" : f.key()) << "  (degree " << f.degree() << ")\n";
        }
        emit(sc, out.str());
      }
      return 0;
    }

    if (coproduct_cmd->parsed()) {
      emit(sc, hopf_dump_to_json(Forest::parse(forest_arg), 2));
      return 0;
    }

    if (nc_cmd->parsed()) {
      std::ostringstream out;
      auto trees = enumerate_trees(sc.degree);
      for (std::size_t i = 0; i < trees.size(); ++i) {
        out << "f" << (i + 1) << " = " << normal_coordinate(trees[i]).to_string() << "\n";
      }
      emit(sc, out.str());
      return 0;
    }

    if (birkhoff_cmd->parsed()) {
      Character phi = load_character(sc);
      BirkhoffPair p = birkhoff(phi);
      if (sc.format == "json") {
        emit(sc, "{\"minus\":" + character_to_json(p.minus, sc.degree) +
                     ",\"plus\":" + character_to_json(p.plus, sc.degree) + "}\n");
      } else {
        emit(sc, "minus:\n" + character_report(p.minus, sc) + "plus:\n" +
                     character_report(p.plus, sc));
      }
      return 0;
    }

    if (locality_cmd->parsed()) {
      Character phi = load_character(sc);
      LocalityReport rep = is_local(phi, sc.degree, exp_trunc_for(sc));
      emit(sc, locality_to_json(rep, 2));
      return rep.is_local ? 0 : 1;
    }

    if (beta_cmd->parsed()) {
      Character phi = load_character(sc);
      InfinitesimalCharacter b = beta(phi, sc.degree, exp_trunc_for(sc));
      std::ostringstream out;
      auto trees = enumerate_trees(sc.degree);
      for (std::size_t i = 0; i < trees.size(); ++i) {
        out << "beta(f" << (i + 1)
            << ") = " << value_at_zero(b(normal_coordinate(trees[i]))).to_string() << "\n";
      }
      emit(sc, out.str());
      return 0;
    }

    if (ren_cmd->parsed()) {
      Character phi = load_character(sc);
      Character ren = renormalized(phi, sc.degree, exp_trunc_for(sc));
      std::ostringstream out;
      auto trees = enumerate_trees(sc.degree);
      for (std::size_t i = 0; i < trees.size(); ++i) {
        out << "ren(f" << (i + 1)
            << ") = " << value_at_zero(ren(normal_coordinate(trees[i]))).to_string()
            << "\n";
      }
      emit(sc, out.str());
      return 0;
    }

    if (lax_cmd->parsed()) {
      Character phi = load_character(sc);
      Character family =
          flow(flow_kind_from_string(sc.kind), phi, sc.m, sc.n, sc.degree,
               exp_trunc_for(sc));
      emit(sc, character_report(family, sc));
      return 0;
    }

    if (toy_cmd->parsed()) {
      ToyConfig cfg{sc.degree, sc.trunc};
      emit(sc, sc.format == "json" ? toy_table_json(cfg, 2) : toy_table_text(cfg));
      return 0;
    }

    if (repro_cmd->parsed()) {
      Section8Report rep = reproduce_section8(ToyConfig{sc.degree, sc.trunc});
      emit(sc, sc.format == "json" ? section8_json(rep, 2) : section8_text(rep));
      return rep.all_pass() ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      if (suite == "acceptance") {
        AcceptanceReport rep = run_acceptance();
        emit(sc, acceptance_text(rep));
        return rep.all_pass() ? 0 : 1;
      }
      auto results = verify_suite(suite, sc.degree);
      std::ostringstream out;
      bool all = true;
      for (const auto& r : results) {
        out << (r.pass ? "ok    " : "FAIL  ") << r.name;
        if (!r.pass && !r.detail.empty()) out << "  [" << r.detail << "]";
        out << "\n";
      }
      for (const auto& r : results) all = all && r.pass;
      emit(sc, out.str());
      return all ? 0 : 1;
    }

    if (sc_cmd->parsed()) {
      emit(sc, structure_constants_to_json(std::min(sc.degree, 4), 2));
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return 2;
}
