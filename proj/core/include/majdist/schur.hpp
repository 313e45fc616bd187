#pragma once

#include <optional>
#include <vector>

#include "majdist/qpoly.hpp"
#include "majdist/shapes.hpp"

namespace majdist {

using PolyMatrix = std::vector<std::vector<QPoly>>;

// Fraction-free (Bareiss) elimination over Z[q]. The 0x0 determinant is 1.
QPoly polynomial_determinant(PolyMatrix m);

// s_{outer/inner}(1, q, ..., q^{m-1}) from the complete-homogeneous
// determinant: det [ m-1+d, d ] with d = outer_i - inner_j - i + j.
QPoly jt_h_specialization(const SkewShape& s, int m);

// The elementary dual over conjugate parts: det [ m, d ] q^{C(d,2)} with
// d = outer'_i - inner'_j - i + j.
QPoly jt_e_specialization(const SkewShape& s, int m);

// s with p == q^s * r. Both zero gives 0; exactly one zero gives nullopt.
// s may be negative (r == q^{-s} p).
std::optional<int> match_up_to_shift(const QPoly& p, const QPoly& r);

}  // namespace majdist
