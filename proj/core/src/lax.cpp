#include "renflow/lax.hpp"

namespace renflow {

LaxRun lax_solve(const InfinitesimalCharacter& l0, int m, int n, int max_degree) {
  LaxRun run;
  run.m = m;
  run.n = n;
  run.max_degree = max_degree;
  run.l0 = l0;
  run.x = inf_shift(inf_scale(l0, SymbolPoly::constant(2)), -n + 2 * m);
  // the factorization needs the pole/holomorphic split of every value, so
  // each shifted window must still reach lambda^0
  for (const auto& t : enumerate_trees(max_degree)) {
    if (run.x(t).trunc() < 1) {
      throw ShiftOutOfWindowError("value of X on " + t.encoding() +
                                  " cannot support the shift by " +
                                  std::to_string(-n + 2 * m));
    }
  }
  run.group = inf_exp(inf_scale(run.x, -SymbolPoly::symbol(Symbol::t)));
  BirkhoffPair pair = birkhoff(run.group);
  run.gminus = pair.minus;
  run.gplus = pair.plus;
  run.lt = adjoint(run.gplus, l0);
  return run;
}

InfinitesimalCharacter lax_m(const LaxRun& run) {
  InfinitesimalCharacter lt = run.lt;
  const int e = run.shift_exponent();
  return InfinitesimalCharacter::from_tree_fn(
      [lt, e](const RootedTree& t) { return r_transform(lt(t).shifted(e)); });
}

std::vector<std::pair<Forest, LaurentSeries>> lax_residual(const LaxRun& run) {
  InfinitesimalCharacter m = lax_m(run);
  InfinitesimalCharacter bracket = commutator(run.lt, m);
  std::vector<std::pair<Forest, LaurentSeries>> out;
  for (const auto& f : enumerate_forests(run.max_degree)) {
    out.emplace_back(f, run.lt(f).derivative(Symbol::t) - bracket(f));
  }
  return out;
}

FlowKind flow_kind_from_string(const std::string& name) {
  if (name == "phi") return FlowKind::phi;
  if (name == "chi") return FlowKind::chi;
  if (name == "tau") return FlowKind::tau;
  if (name == "xi") return FlowKind::xi;
  throw ConfigError("unknown flow kind: " + name);
}

std::string flow_kind_name(FlowKind kind) {
  switch (kind) {
    case FlowKind::phi: return "phi";
    case FlowKind::chi: return "chi";
    case FlowKind::tau: return "tau";
    case FlowKind::xi: return "xi";
  }
  return "?";
}

namespace {

void require_flow_local(const Character& phi, FlowKind kind, int max_degree,
                        int exp_trunc) {
  LocalityReport rep = is_local(phi, max_degree, exp_trunc);
  if (!rep.is_local) {
    throw NotLocalError("flow " + flow_kind_name(kind) +
                        " requires a local character; witness at " +
                        rep.witnesses.front().target);
  }
}

}  // namespace

Character flow(FlowKind kind, const Character& phi, int m, int n, int max_degree,
               int exp_trunc) {
  switch (kind) {
    case FlowKind::phi: {
      LaxRun run = lax_solve(r_tilde(phi), m, n, max_degree);
      return r_tilde_inv(run.lt);
    }
    case FlowKind::chi: {
      LaxRun run = lax_solve(char_log(phi), m, n, max_degree);
      return inf_exp(run.lt);
    }
    case FlowKind::tau: {
      require_flow_local(phi, FlowKind::tau, max_degree, exp_trunc);
      LaxRun run = lax_solve(beta_tilde(phi), m, n, max_degree);
      return r_tilde_inv(inf_shift(run.lt, -1));
    }
    case FlowKind::xi: {
      LaxRun run = lax_solve(beta(phi, max_degree, exp_trunc), m, n, max_degree);
      return r_tilde_inv(inf_shift(inf_at_lambda_zero(run.lt), -1));
    }
  }
  throw ConfigError("unknown flow kind");
}

LocalityReport flow_locality(FlowKind kind, const Character& phi, int m, int n,
                             int max_degree, int exp_trunc) {
  Character family = flow(kind, phi, m, n, max_degree, exp_trunc);
  Character minus = birkhoff(twist_rge(family, exp_trunc)).minus;
  LocalityReport report;
  report.checked_degree = max_degree;
  auto trees = enumerate_trees(max_degree);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    LaurentSeries v = minus(normal_coordinate(trees[i]));
    LaurentSeries s_part = v - v.substitute(Symbol::s, SymbolPoly());
    if (!s_part.is_zero()) {
      report.is_local = false;
      report.witnesses.push_back({"f" + std::to_string(i + 1), s_part});
    }
  }
  return report;
}

ChiCriterion chi_locality_criterion(const Character& phi) {
  BirkhoffPair p = birkhoff(phi);
  ForestPolynomial f1 = normal_coordinate_by_index(1);
  ForestPolynomial f2 = normal_coordinate_by_index(2);
  ChiCriterion crit;
  crit.minus_f1 = p.minus(f1);
  crit.lhs = p.minus(f1) * value_at_zero(p.plus(f2)) * rat(3);
  crit.rhs = p.minus(f2) * value_at_zero(p.plus(f1));
  crit.holds = crit.minus_f1.is_zero() || crit.lhs == crit.rhs;
  return crit;
}

namespace {

bool inf_family_equals(const InfinitesimalCharacter& x, const InfinitesimalCharacter& y,
                       int degree) {
  for (const auto& t : enumerate_trees(degree)) {
    if (!x(t).agrees_with(y(t))) return false;
  }
  return true;
}

std::string first_mismatch(const InfinitesimalCharacter& x, const InfinitesimalCharacter& y,
                           int degree) {
  for (const auto& t : enumerate_trees(degree)) {
    if (!x(t).agrees_with(y(t))) {
      return t.encoding() + ": " + x(t).to_string() + " vs " + y(t).to_string();
    }
  }
  return "";
}

}  // namespace

std::vector<CheckResult> beta_flow_checks(const Character& phi, int m, int n,
                                          int max_degree, int exp_trunc) {
  require_flow_local(phi, FlowKind::phi, max_degree, exp_trunc);
  std::vector<CheckResult> out;
  const int e = -n + 2 * m;

  LaxRun run = lax_solve(r_tilde(phi), m, n, max_degree);
  Character phi_t = r_tilde_inv(run.lt);
  InfinitesimalCharacter beta_t = inf_shift(run.lt, 1);  // lambda R~(phi_t)

  {  // (a) d/dt beta~ = [beta~, M]
    InfinitesimalCharacter mm = lax_m(run);
    InfinitesimalCharacter bracket = commutator(beta_t, mm);
    bool ok = true;
    std::string detail;
    for (const auto& t : enumerate_trees(max_degree)) {
      LaurentSeries r = beta_t(t).derivative(Symbol::t) - bracket(t);
      if (!r.is_zero()) {
        ok = false;
        detail = t.encoding() + ": " + r.to_string();
        break;
      }
    }
    out.push_back({"beta_tilde_lax_equation", ok, detail});
  }

  if (e >= 1) {  // (b) constant flow
    bool ok = true;
    std::string detail;
    for (const auto& t : enumerate_trees(max_degree)) {
      if (!phi_t(t).agrees_with(phi(t))) {
        ok = false;
        detail = t.encoding();
        break;
      }
    }
    out.push_back({"constant_flow_for_positive_shift", ok, detail});
  }

  if (e <= 0) {  // (c) the bracket equation for the scalar beta family
    // beta_{phi_t} = -Res((phi_t)_-) o Y, a scalar family polynomial in t
    Character minus_t = birkhoff(phi_t).minus;
    InfinitesimalCharacter beta_family =
        InfinitesimalCharacter::from_tree_fn([minus_t](const RootedTree& t) {
          return LaurentSeries::constant(residue(minus_t(t)) * rat(-t.degree()));
        });
    // P(t) = (phi_t)_+(0) as a scalar character family
    Character plus_t = birkhoff(phi_t).plus;
    Character p0 = Character::from_tree_fn([plus_t](const RootedTree& t) {
      return LaurentSeries::constant(value_at_zero(plus_t(t)));
    });
    // Q = (dP/dt) * P^{-1}
    Functional dp = Functional::from_fn(
        [p0](const Forest& f) { return p0(f).derivative(Symbol::t); });
    Functional q = convolve(dp, Functional::of(char_inverse(p0)));
    InfinitesimalCharacter qi = InfinitesimalCharacter::from_tree_fn(
        [q](const RootedTree& t) { return q(Forest::single(t)); });
    // W = Res(lambda^{e-2} beta~_t) = coefficient of lambda^{1-e} in beta~_t
    InfinitesimalCharacter w = InfinitesimalCharacter::from_tree_fn(
        [beta_t, e](const RootedTree& t) {
          return LaurentSeries::constant(beta_t(t).coeff(1 - e));
        });
    InfinitesimalCharacter v =
        inf_add(inf_scale(qi, SymbolPoly::constant(-1)),
                inf_scale(adjoint(p0, w), SymbolPoly::constant(2)));
    InfinitesimalCharacter rhs = commutator(beta_family, v);
    bool ok = true;
    std::string detail;
    for (const auto& t : enumerate_trees(max_degree)) {
      LaurentSeries r = beta_family(t).derivative(Symbol::t) - rhs(t);
      if (!r.is_zero()) {
        ok = false;
        detail = t.encoding() + ": " + r.to_string();
        break;
      }
    }
    out.push_back({"beta_bracket_equation", ok, detail});
  }

  if (e >= 0) {  // (d) runs started at beta~ are frozen
    LaxRun beta_run = lax_solve(beta_tilde(phi), m, n, max_degree);
    bool ok = inf_family_equals(beta_run.lt, beta_run.l0, max_degree);
    out.push_back({"beta_tilde_fixed_point", ok,
                   ok ? "" : first_mismatch(beta_run.lt, beta_run.l0, max_degree)});
  }

  return out;
}

std::vector<CheckResult> exp_flow_beta_residual(const Character& phi, int m, int n,
                                                int max_degree, int exp_trunc) {
  require_flow_local(phi, FlowKind::chi, max_degree, exp_trunc);
  std::vector<CheckResult> out;

  LaxRun run = lax_solve(char_log(phi), m, n, max_degree);
  Character chi_t = inf_exp(run.lt);
  Character chi_inv = char_inverse(chi_t);

  // A = chi_t^{-1} * d/dt chi_t, the exact derivative of the exponential
  // along the flow.
  Functional dchi = Functional::from_fn(
      [chi_t](const Forest& f) { return chi_t(f).derivative(Symbol::t); });
  Functional a_raw = convolve(Functional::of(chi_inv), dchi);
  InfinitesimalCharacter a = InfinitesimalCharacter::from_tree_fn(
      [a_raw](const RootedTree& t) { return a_raw(Forest::single(t)); });

  InfinitesimalCharacter beta_t = beta_tilde(chi_t);

  {  // d/dt beta~ = [beta~, A] + lambda (A o Y)
    InfinitesimalCharacter bracket = commutator(beta_t, a);
    bool ok = true;
    std::string detail;
    for (const auto& t : enumerate_trees(max_degree)) {
      LaurentSeries rhs = bracket(t) + a(t).shifted(1) * rat(t.degree());
      LaurentSeries r = beta_t(t).derivative(Symbol::t) - rhs;
      if (!r.is_zero()) {
        ok = false;
        detail = t.encoding() + ": " + r.to_string();
        break;
      }
    }
    out.push_back({"exp_flow_beta_tilde_equation", ok, detail});
  }

  {  // scalar beta-function formula, degree by degree while the family is
     // local at that degree (locality can fail along this flow)
    Character minus_t = birkhoff(twist_rge(chi_t, exp_trunc)).minus;
    Character plus_t = birkhoff(chi_t).plus;
    Character p0 = Character::from_tree_fn([plus_t](const RootedTree& t) {
      return LaurentSeries::constant(value_at_zero(plus_t(t)));
    });
    InfinitesimalCharacter beta_family =
        InfinitesimalCharacter::from_tree_fn([minus_t](const RootedTree& t) {
          LaurentSeries v = minus_t(t).substitute(Symbol::s, SymbolPoly());
          return LaurentSeries::constant(residue(v) * rat(-t.degree()));
        });
    InfinitesimalCharacter bracket_plus_res = InfinitesimalCharacter::from_tree_fn(
        [beta_t, a](const RootedTree& t) {
          LaurentSeries br = commutator(beta_t, a)(t);
          SymbolPoly plus0 = holo_part(br).coeff(0);
          SymbolPoly res = residue(a(t)) * rat(t.degree());
          return LaurentSeries::constant(plus0 + res);
        });
    InfinitesimalCharacter rhs = adjoint(p0, bracket_plus_res);
    bool all_ok = true;
    std::string detail;
    for (const auto& t : enumerate_trees(max_degree)) {
      LaurentSeries w = minus_t(t);
      if (!(w - w.substitute(Symbol::s, SymbolPoly())).is_zero()) {
        detail += t.encoding() + ": not local, skipped; ";
        continue;
      }
      LaurentSeries r = beta_family(t).derivative(Symbol::t) - rhs(t);
      if (!r.is_zero()) {
        all_ok = false;
        detail += t.encoding() + ": residual " + r.to_string() + "; ";
      }
    }
    out.push_back({"exp_flow_beta_function_equation", all_ok, detail});
  }

  return out;
}

InfinitesimalCharacter feynman_initial(const Character& phi, int m, int n) {
  return inf_shift(inf_scale(char_log(phi), SymbolPoly::constant(rat(1, 2))), n - 2 * m);
}

}  // namespace renflow
