#pragma once

#include <string>
#include <vector>

#include "renflow/birkhoff.hpp"

namespace renflow {

// Integrable flows on infinitesimal characters driven by the factorization
// of exp(-tX) with X = 2 lambda^{-n+2m} L0.  The flow parameter is the
// symbol t throughout; scale twists use the symbol s, so locality sweeps of
// whole families stay exact with both symbols live at once.
struct LaxRun {
  int m = 0;
  int n = 0;
  int max_degree = 4;
  InfinitesimalCharacter l0;
  InfinitesimalCharacter x;       // 2 lambda^{-n+2m} L0
  Character group;                // exp(-tX)
  Character gminus, gplus;        // Birkhoff pair of exp(-tX)
  InfinitesimalCharacter lt;      // Ad(gplus) L0

  int shift_exponent() const { return -n + 2 * m; }
};

// Solves dL/dt = [L, M] with M = R(lambda^{-n+2m} L) by factorization.
// Throws ShiftOutOfWindow when a value of X retains no usable window.
LaxRun lax_solve(const InfinitesimalCharacter& l0, int m, int n, int max_degree);

// M = R(lambda^{-n+2m} Lt) as an infinitesimal character family.
InfinitesimalCharacter lax_m(const LaxRun& run);

// d/dt Lt(x) - [Lt, M](x) on every forest of degree <= max_degree;
// identically zero within windows when the run is a solution.
std::vector<std::pair<Forest, LaurentSeries>> lax_residual(const LaxRun& run);

enum class FlowKind { phi, chi, tau, xi };

FlowKind flow_kind_from_string(const std::string& name);
std::string flow_kind_name(FlowKind kind);

// The four character-level flows:
//   phi: R~^{-1}(L(t))            with L0 = R~(phi)
//   chi: exp(L(t))                with L0 = log(phi)
//   tau: (lambda R~)^{-1}(L(t))   with L0 = lambda R~(phi)
//   xi:  (lambda R~)^{-1}(L(t)|0) with L0 = beta(phi)
// tau and xi require a local character (NotLocal otherwise).
Character flow(FlowKind kind, const Character& phi, int m, int n, int max_degree,
               int exp_trunc);

// Locality report of a flow family evaluated on the normal coordinates of
// the trees up to max_degree, with s and t symbolic.
LocalityReport flow_locality(FlowKind kind, const Character& phi, int m, int n,
                             int max_degree, int exp_trunc);

// The locality criterion for the exp-route flow on the degree <= 4
// subalgebra: minus(f1) = 0 or
// 3 minus(f1) (plus(f2)|0) = minus(f2) (plus(f1)|0).
struct ChiCriterion {
  bool holds = false;
  LaurentSeries lhs, rhs;  // the two sides of the second alternative
  LaurentSeries minus_f1;
};
ChiCriterion chi_locality_criterion(const Character& phi);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Flow equations for the beta character along the phi-flow:
//  (a) d/dt beta~ - [beta~, M] = 0,
//  (b) for -n+2m >= 1 the flow is constant: phi_t = phi,
//  (c) for -n+2m <= 0 the derived bracket equation for the scalar beta family,
//  (d) the run with L0 = beta~ is constant for -n+2m >= 0.
std::vector<CheckResult> beta_flow_checks(const Character& phi, int m, int n,
                                          int max_degree, int exp_trunc);

// Residual of the flow equation for beta~ along the exp-route flow
// phi(t) = exp(L(t)), L0 = log(phi), including the scalar beta-function
// formula whenever the family stays local at the tested degrees.
std::vector<CheckResult> exp_flow_beta_residual(const Character& phi, int m, int n,
                                                int max_degree, int exp_trunc);

// Initial condition L0 = (1/2) lambda^{n-2m} log(phi), so that exp(X) = phi
// and the factorization at t = -1 is the Birkhoff factorization of phi.
InfinitesimalCharacter feynman_initial(const Character& phi, int m, int n);

}  // namespace renflow
