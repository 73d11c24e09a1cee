#include "renflow/golden.hpp"

#include <json.hpp>
#include <sstream>

#include "renflow/json_io.hpp"
#include "renflow/lax.hpp"

namespace renflow {

namespace {

SymbolPoly kc(long n, long d = 1) { return SymbolPoly::constant(rat(n, d)); }
const SymbolPoly pi2 = SymbolPoly::symbol(Symbol::pi2);
const SymbolPoly pi4 = SymbolPoly::symbol(Symbol::pi2, 2);
const SymbolPoly sym_a = SymbolPoly::symbol(Symbol::a);
const SymbolPoly sym_s = SymbolPoly::symbol(Symbol::s);
const SymbolPoly sym_t = SymbolPoly::symbol(Symbol::t);

struct Collector {
  Section8Report report;

  void coeff(const std::string& group, const std::string& name, const LaurentSeries& v,
             int exp, const SymbolPoly& expected) {
    GoldenEntry e;
    e.group = group;
    e.name = name + " [lambda^" + std::to_string(exp) + "]";
    e.expected = expected.to_string();
    try {
      SymbolPoly actual = v.coeff(exp);
      e.actual = actual.to_string();
      e.pass = actual == expected;
    } catch (const Error& err) {
      e.actual = err.what();
      e.pass = false;
    }
    report.entries.push_back(std::move(e));
  }

  void scalar(const std::string& group, const std::string& name, const SymbolPoly& actual,
              const SymbolPoly& expected) {
    GoldenEntry e;
    e.group = group;
    e.name = name;
    e.expected = expected.to_string();
    e.actual = actual.to_string();
    e.pass = actual == expected;
    report.entries.push_back(std::move(e));
  }

  void flag(const std::string& group, const std::string& name, bool pass,
            const std::string& expected, const std::string& actual) {
    report.entries.push_back({group, name, expected, actual, pass});
  }
};

}  // namespace

bool Section8Report::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

std::vector<const GoldenEntry*> Section8Report::group(const std::string& g) const {
  std::vector<const GoldenEntry*> out;
  for (const auto& e : entries) {
    if (e.group == g) out.push_back(&e);
  }
  return out;
}

Section8Report reproduce_section8(const ToyConfig& cfg) {
  Collector c;
  const int et = toy_internal_trunc(cfg) + 2 * cfg.max_degree;
  Character phi = toy_character(cfg);
  auto f = [](int i) { return normal_coordinate_by_index(i); };

  {  // the character table on normal coordinates
    LaurentSeries f1 = phi(f(1));
    c.coeff("toy", "phi(f1)", f1, -1, kc(1));
    c.coeff("toy", "phi(f1)", f1, 0, -sym_a);
    LaurentSeries f2 = phi(f(2));
    c.coeff("toy", "phi(f2)", f2, -1, SymbolPoly());
    c.coeff("toy", "phi(f2)", f2, 0, pi2 * kc(1, 4));
    LaurentSeries f4 = phi(f(4));
    c.coeff("toy", "phi(f4)", f4, -2, SymbolPoly());
    c.coeff("toy", "phi(f4)", f4, -1, pi2 * kc(7, 36));
    c.coeff("toy", "phi(f4)", f4, 0, pi2 * sym_a * kc(-7, 12));
    LaurentSeries f8 = phi(f(8));
    c.coeff("toy", "phi(f8)", f8, -3, SymbolPoly());
    c.coeff("toy", "phi(f8)", f8, -2, pi2 * kc(1, 12));
    c.coeff("toy", "phi(f8)", f8, -1, pi2 * sym_a * kc(-1, 3));
  }

  LaxRun run = lax_solve(r_tilde(phi), 0, 0, cfg.max_degree);
  Character phi_t = r_tilde_inv(run.lt);

  {  // the infinitesimal flow
    LaurentSeries l4 = run.lt(f(4));
    c.coeff("lax", "L(t)(f4)", l4, -2, SymbolPoly());
    c.coeff("lax", "L(t)(f4)", l4, -1, pi2 * (kc(1, 3) + sym_t * kc(2)));
    c.coeff("lax", "L(t)(f4)", l4, 0, -pi2 * sym_a * (kc(1) + sym_t * kc(4)));
    LaurentSeries l8 = run.lt(f(8));
    c.coeff("lax", "L(t)(f8)", l8, -2, SymbolPoly());
    c.coeff("lax", "L(t)(f8)", l8, -1, pi2 * sym_a * sym_t * (kc(-4) + sym_t * kc(-6)));
    c.coeff("lax", "L(t)(f8)", l8, 0,
            pi4 * (kc(7, 6) + sym_t * kc(37, 6) + sym_t * sym_t * kc(7, 2)) +
                pi2 * sym_a * sym_a * sym_t * (kc(8) + sym_t * kc(9)));
  }

  {  // the character flow
    c.flag("flow", "phi_t(f1) frozen", phi_t(f(1)).agrees_with(phi(f(1))), "phi(f1)",
           "phi_t(f1)");
    c.flag("flow", "phi_t(f2) frozen", phi_t(f(2)).agrees_with(phi(f(2))), "phi(f2)",
           "phi_t(f2)");
    LaurentSeries p4 = phi_t(f(4));
    c.coeff("flow", "phi_t(f4)", p4, -1, pi2 * (kc(7, 36) + sym_t * kc(2, 3)));
    c.coeff("flow", "phi_t(f4)", p4, 0, -pi2 * sym_a * (kc(7, 12) + sym_t * kc(4, 3)));
    LaurentSeries p8 = phi_t(f(8));
    c.coeff("flow", "phi_t(f8)", p8, -2, pi2 * (kc(1, 12) + sym_t * kc(1, 2)));
    c.coeff("flow", "phi_t(f8)", p8, -1,
            -pi2 * sym_a * (kc(1, 3) + sym_t * kc(5, 2) + sym_t * sym_t * kc(3, 2)));
    c.coeff("flow", "phi_t(f8)", p8, 0,
            pi4 * (kc(83, 144) + sym_t * kc(2) + sym_t * sym_t * kc(7, 8)) +
                pi2 * sym_a * sym_a *
                    (kc(2, 3) + sym_t * kc(17, 4) + sym_t * sym_t * kc(9, 4)));
  }

  Character minus_t = birkhoff(twist_rge(phi_t, et)).minus;
  Character chi_t = inf_exp(lax_solve(char_log(phi), 0, 0, cfg.max_degree).lt);
  Character chi_minus = birkhoff(twist_rge(chi_t, et)).minus;

  {  // counterterms
    LaurentSeries m1 = minus_t(f(1));
    c.coeff("counterterm", "(phi_t^s)_-(f1)", m1, -1, kc(-1));
    c.flag("counterterm", "(phi_t^s)_-(f2) = 0", minus_t(f(2)).is_zero(), "0",
           minus_t(f(2)).to_string());
    LaurentSeries m4 = minus_t(f(4));
    c.coeff("counterterm", "(phi_t^s)_-(f4)", m4, -1,
            pi2 * (kc(1, 18) + sym_t * kc(-2, 3)));
    LaurentSeries m8 = minus_t(f(8));
    // the lambda^-2 coefficient is pinned by the t = 0 cross-check below
    c.coeff("counterterm", "(phi_t^s)_-(f8)", m8, -2,
            pi2 * (kc(1, 24) + sym_t * kc(-1, 2)));
    c.coeff("counterterm", "(phi_t^s)_-(f8)", m8, -1,
            pi2 * sym_a * sym_t * (kc(3, 2) + sym_t * kc(3, 2)));
    bool s_free = true;
    for (int i : {1, 2, 4, 8}) {
      if (minus_t(f(i)).depends_on(Symbol::s)) s_free = false;
    }
    c.flag("counterterm", "(phi_t^s)_- independent of s", s_free, "no s dependence",
           s_free ? "no s dependence" : "s appears");

    LaurentSeries cm8 = chi_minus(f(8));
    c.coeff("counterterm", "(chi_t^s)_-(f8)", cm8, -2, pi2 * kc(1, 24));
    c.coeff("counterterm", "(chi_t^s)_-(f8)", cm8, -1,
            pi2 * sym_t *
                (sym_s * kc(3) + sym_a * (kc(5, 6) + sym_t * kc(3))));
    c.flag("counterterm", "(chi_t^s)_-(f8) depends on s",
           cm8.depends_on(Symbol::s), "s appears", cm8.depends_on(Symbol::s)
               ? "s appears"
               : "no s dependence");

    // both flows start at phi, so their counterterms agree at t = 0
    bool agree_at_zero = true;
    for (int i : {1, 2, 4, 8}) {
      LaurentSeries a0 = minus_t(f(i)).substitute(Symbol::t, SymbolPoly());
      LaurentSeries b0 = chi_minus(f(i)).substitute(Symbol::t, SymbolPoly());
      if (!a0.agrees_with(b0)) agree_at_zero = false;
    }
    c.flag("counterterm", "flow counterterms agree at t = 0", agree_at_zero, "equal",
           agree_at_zero ? "equal" : "mismatch");
  }

  {  // beta functions
    InfinitesimalCharacter b = beta(phi_t, cfg.max_degree, et);
    c.scalar("beta", "beta_{phi_t}(f1)", value_at_zero(b(f(1))), kc(1));
    c.scalar("beta", "beta_{phi_t}(f2)", value_at_zero(b(f(2))), SymbolPoly());
    c.scalar("beta", "beta_{phi_t}(f4)", value_at_zero(b(f(4))),
             pi2 * (kc(-1, 6) + sym_t * kc(2)));
    c.scalar("beta", "beta_{phi_t}(f8)", value_at_zero(b(f(8))),
             pi2 * sym_a * sym_t * (kc(-6) + sym_t * kc(-6)));
    InfinitesimalCharacter bc = beta(chi_t, 3, et);
    c.scalar("beta", "beta_{chi_t}(f4)", value_at_zero(bc(f(4))),
             pi2 * (kc(-1, 6) + sym_t * kc(3)));
  }

  {  // renormalized characters and the abstract RGE
    Character ren = renormalized(phi_t, cfg.max_degree, et);
    c.scalar("ren", "(phi_t)_ren(s)(f1)", value_at_zero(ren(f(1))), sym_s - sym_a);
    c.scalar("ren", "(phi_t)_ren(s)(f2)", value_at_zero(ren(f(2))), pi2 * kc(1, 4));
    c.scalar("ren", "(phi_t)_ren(s)(f4)", value_at_zero(ren(f(4))),
             pi2 * kc(1, 12) *
                 (sym_s * (kc(1) + sym_t * kc(24)) - sym_a * (kc(1) + sym_t * kc(16))));
    c.scalar("ren", "(phi_t)_ren(s)(f8)", value_at_zero(ren(f(8))),
             pi2 * kc(1, 96) *
                 (sym_s * sym_s * kc(12) +
                  pi2 * (kc(11) + sym_t * kc(136) + sym_t * sym_t * kc(84)) -
                  sym_s * sym_a * kc(24) * (kc(1) + sym_t * kc(20) + sym_t * sym_t * kc(24)) +
                  sym_a * sym_a * kc(12) * (kc(1) + sym_t * kc(22) + sym_t * sym_t * kc(18))));

    Character renc = renormalized(chi_t, 3, et);
    c.scalar("ren", "(chi_t)_ren(s)(f1)", value_at_zero(renc(f(1))), sym_s - sym_a);
    c.scalar("ren", "(chi_t)_ren(s)(f2)", value_at_zero(renc(f(2))), pi2 * kc(1, 4));
    c.scalar("ren", "(chi_t)_ren(s)(f4)", value_at_zero(renc(f(4))),
             pi2 * kc(1, 12) *
                 (sym_s * (kc(1) + sym_t * kc(36)) - sym_a * (kc(1) + sym_t * kc(24))));

    bool arge_phi = true;
    for (const auto& [forest, r] : arge_residual(phi_t, cfg.max_degree, et)) {
      if (!r.is_zero()) arge_phi = false;
    }
    c.flag("ren", "(phi_t)_ren satisfies the abstract RGE", arge_phi, "0",
           arge_phi ? "0" : "nonzero residual");
    bool arge_chi = true;
    for (const auto& [forest, r] : arge_residual(chi_t, 3, et)) {
      if (!r.is_zero()) arge_chi = false;
    }
    c.flag("ren", "(chi_t)_ren satisfies the abstract RGE", arge_chi, "0",
           arge_chi ? "0" : "nonzero residual");
  }

  return std::move(c.report);
}

std::string section8_text(const Section8Report& report) {
  std::ostringstream out;
  std::string group;
  for (const auto& e : report.entries) {
    if (e.group != group) {
      group = e.group;
      out << "[" << group << "]\n";
    }
    out << "  " << (e.pass ? "ok      " : "MISMATCH") << "  " << e.name;
    if (!e.pass) {
      out << "\n    expected: " << e.expected << "\n    actual:   " << e.actual;
    }
    out << "\n";
  }
  out << (report.all_pass() ? "all entries match\n" : "MISMATCHES FOUND\n");
  return out.str();
}

std::string section8_json(const Section8Report& report, int indent) {
  nlohmann::ordered_json j;
  j["all_pass"] = report.all_pass();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"group", e.group},
                       {"name", e.name},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"pass", e.pass}});
  }
  j["entries"] = std::move(entries);
  return j.dump(indent) + "\n";
}

std::string toy_table_text(const ToyConfig& cfg) {
  std::ostringstream out;
  for (const auto& [name, series] : toy_table(cfg)) {
    out << "phi(" << name << ") = " << clip(series, cfg.trunc).to_string() << "\n";
  }
  return out.str();
}

std::string toy_table_json(const ToyConfig& cfg, int indent) {
  nlohmann::ordered_json j;
  for (const auto& [name, series] : toy_table(cfg)) {
    j[name] = nlohmann::ordered_json::parse(series_to_json(clip(series, cfg.trunc)));
  }
  return j.dump(indent) + "\n";
}

}  // namespace renflow
