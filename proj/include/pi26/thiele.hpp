// Thiele continued-fraction interpolation over exact rationals:
//
//   f(x) = b_0 + (x - x_0)/(b_1 + (x - x_1)/(b_2 + ...))
//
// fitted by inverted differences, evaluated innermost-out, and foldable into
// the affine-tail layout c_1 + (x - x_0)/(c_2 + ... (c_{M-1} + K*x)).
#pragma once

#include <pi26/numbers.hpp>

#include <utility>
#include <vector>

namespace pi26 {

struct ThieleInterpolant {
    std::vector<BigRat> nodes;   // x_0..x_{N-1}, fit order (order is normative)
    std::vector<BigRat> levels;  // b_0..b_{M-1}; M < N when the data degenerated
                                 // to a lower-order fraction (constant column)

    BigRat eval(const BigRat& x) const;  // pole_error at a pole

    // Affine-tail layout (c_1..c_{M-1}, K): c_i = b_{i-1} except the last, which
    // absorbs the innermost level via K = 1/b_{M-1},
    // c_{M-1} = b_{M-2} - x_{M-2}*K. fold_error if b_{M-1} == 0 or M < 2.
    std::pair<std::vector<BigRat>, BigRat> folded() const;

    // Evaluation through the folded view; equals eval() at every non-pole x.
    static BigRat eval_folded(const std::vector<BigRat>& cs, const BigRat& K,
                              const std::vector<BigRat>& nodes, const BigRat& x);
};

// Inverted-difference fit. Nodes must be pairwise distinct. When a difference
// column becomes constant the fraction terminates early (exactness at all N
// nodes still holds); a zero denominator in a non-constant column raises
// breakdown_error naming the level and node.
ThieleInterpolant fit_thiele(const std::vector<std::pair<BigRat, BigRat>>& points);

}  // namespace pi26
