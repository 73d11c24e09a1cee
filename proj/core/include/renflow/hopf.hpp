#pragma once

#include "renflow/forest_poly.hpp"

namespace renflow {

// Hopf structure of the algebra of rooted forests: coproduct by admissible
// cuts, reduced coproduct, antipode and the grading biderivation Y.  All
// values are memoized per canonical encoding behind an internal lock, so
// concurrent use is safe.  Functions returning references point into the
// memo, whose entries are never invalidated.

// Delta(x), extended multiplicatively from trees to forests.
const TensorSum& coproduct(const RootedTree& t);
const TensorSum& coproduct(const Forest& f);

// Reduced coproduct Delta~(x) = Delta(x) - x(x)1 - 1(x)x; throws
// UnitComponent when x has a unit component.
const TensorSum& reduced_coproduct(const Forest& f);
TensorSum reduced_coproduct(const ForestPolynomial& p);

// Antipode, extended multiplicatively (H is commutative).
const ForestPolynomial& antipode(const RootedTree& t);
ForestPolynomial antipode(const Forest& f);
ForestPolynomial antipode(const ForestPolynomial& p);

// Y(x) = deg(x) * x on each forest term.
ForestPolynomial grading_Y(const ForestPolynomial& p);

}  // namespace renflow
