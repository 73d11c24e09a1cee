#include "renflow/birkhoff.hpp"

namespace renflow {

namespace {

LaurentSeries bogoliubov_bar(const Character& minus, const Character& phi,
                             const RootedTree& t) {
  LaurentSeries bar = phi(t);
  for (const auto& [legs, c] : reduced_coproduct(Forest::single(t)).terms()) {
    bar += minus(legs.first) * phi(legs.second) * c;
  }
  return bar;
}

}  // namespace

BirkhoffPair birkhoff(const Character& phi) {
  Character minus = Character::make_recursive([phi](const Character& self, const RootedTree& t) {
    return -pole_part(bogoliubov_bar(self, phi, t));
  });
  Character plus = Character::from_tree_fn([phi, minus](const RootedTree& t) {
    return holo_part(bogoliubov_bar(minus, phi, t));
  });
  return {minus, plus};
}

LocalityReport is_local(const Character& phi, int max_degree, int exp_trunc) {
  Character twisted_minus = birkhoff(twist_rge(phi, exp_trunc)).minus;
  LocalityReport report;
  report.checked_degree = max_degree;
  for (const auto& t : enumerate_trees(max_degree)) {
    LaurentSeries v = twisted_minus(t);
    LaurentSeries s_part = v - v.substitute(Symbol::s, SymbolPoly());
    if (!s_part.is_zero()) {
      report.is_local = false;
      report.witnesses.push_back({t.encoding(), s_part});
    }
  }
  return report;
}

InfinitesimalCharacter beta_tilde(const Character& phi) {
  return inf_shift(r_tilde(phi), 1);
}

InfinitesimalCharacter beta(const Character& phi, int check_degree, int exp_trunc) {
  LocalityReport loc = is_local(phi, check_degree, exp_trunc);
  if (!loc.is_local) {
    throw NotLocalError("character is not local up to degree " +
                        std::to_string(check_degree) + "; first witness at " +
                        loc.witnesses.front().target);
  }
  Character minus = birkhoff(phi).minus;
  return InfinitesimalCharacter::from_tree_fn([minus](const RootedTree& t) {
    SymbolPoly res = residue(minus(t));
    return LaurentSeries::constant(res * rat(-t.degree()));
  });
}

InfinitesimalCharacter beta_via_adjoint(const Character& phi, int check_degree,
                                        int exp_trunc) {
  LocalityReport loc = is_local(phi, check_degree, exp_trunc);
  if (!loc.is_local) {
    throw NotLocalError("character is not local up to degree " +
                        std::to_string(check_degree));
  }
  Character plus = birkhoff(phi).plus;
  Character plus0 = Character::from_tree_fn([plus](const RootedTree& t) {
    return LaurentSeries::constant(value_at_zero(plus(t)));
  });
  return adjoint(plus0, inf_at_lambda_zero(beta_tilde(phi)));
}

namespace {

Character plus_at_zero(const Character& phi, int exp_trunc) {
  Character plus = birkhoff(twist_rge(phi, exp_trunc)).plus;
  return Character::from_tree_fn([plus](const RootedTree& t) {
    return LaurentSeries::constant(value_at_zero(plus(t)));
  });
}

void require_local(const Character& phi, int check_degree, int exp_trunc,
                   const char* what) {
  LocalityReport loc = is_local(phi, check_degree, exp_trunc);
  if (!loc.is_local) {
    throw NotLocalError(std::string(what) + " requires a local character (degree " +
                        std::to_string(check_degree) + ", witness at " +
                        loc.witnesses.front().target + ")");
  }
}

}  // namespace

Character one_param_subgroup(const Character& phi, int check_degree, int exp_trunc) {
  require_local(phi, check_degree, exp_trunc, "one-parameter subgroup");
  Character plus_inv = char_inverse(birkhoff(phi).plus);
  Character twisted_plus = birkhoff(twist_rge(phi, exp_trunc)).plus;
  Character conv = convolve(plus_inv, twisted_plus);
  return Character::from_tree_fn([conv](const RootedTree& t) {
    return LaurentSeries::constant(value_at_zero(conv(t)));
  });
}

Character renormalized(const Character& phi, int check_degree, int exp_trunc) {
  require_local(phi, check_degree, exp_trunc, "renormalized character");
  return plus_at_zero(phi, exp_trunc);
}

std::vector<std::pair<Forest, SymbolPoly>> arge_residual(const Character& phi,
                                                         int check_degree, int exp_trunc) {
  Character ren = renormalized(phi, check_degree, exp_trunc);
  InfinitesimalCharacter b = beta(phi, check_degree, exp_trunc);
  Functional rhs = convolve(Functional::of(b), Functional::of(ren));
  std::vector<std::pair<Forest, SymbolPoly>> out;
  for (const auto& f : enumerate_forests(check_degree)) {
    SymbolPoly lhs = value_at_zero(ren(f)).derivative(Symbol::s);
    SymbolPoly r = lhs - value_at_zero(rhs(f));
    out.emplace_back(f, r);
  }
  return out;
}

}  // namespace renflow
