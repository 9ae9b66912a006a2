#pragma once

#include "pmetric/code.hpp"
#include "pmetric/element_set.hpp"
#include "pmetric/field.hpp"
#include "pmetric/poset.hpp"

namespace pmetric {

/// supp(x) = {i : x_i ≠ 0}
ElementSet support(const FieldVector& x);

/// ω_P(x) = |⟨supp(x)⟩|
int pweight(const Poset& p, const FieldVector& x);

/// d_P(x, y) = ω_P(x - y)
int pdist(const Poset& p, const FieldVector& x, const FieldVector& y);

/// δ_P(C): least P-weight of a nonzero codeword.
int min_pdistance(const Poset& p, const LinearCode& code);

}  // namespace pmetric
