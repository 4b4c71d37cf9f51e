#pragma once

#include <gmpxx.h>

#include <vector>

namespace modunits {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Row-style Hermite normal form of the lattice spanned by the rows: upper
// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

// HNF basis of {x in Z^n : A x = 0 (mod moduli)} where A has one row per
// modulus and n columns.
IntMatrix congruence_kernel(const IntMatrix& A, const std::vector<mpz_class>& moduli);

}  // namespace modunits
