#include <pi26/thiele.hpp>

namespace pi26 {

ThieleInterpolant fit_thiele(const std::vector<std::pair<BigRat, BigRat>>& points) {
    const std::size_t n = points.size();
    if (n < 2) {
        throw domain_error("fit_thiele needs at least two points");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first) {
                throw domain_error("fit_thiele: duplicate node " +
                                   to_fraction(points[i].first));
            }
        }
    }
    ThieleInterpolant t;
    t.nodes.reserve(n);
    std::vector<BigRat> cur;
    cur.reserve(n);
    for (const auto& p : points) {
        t.nodes.push_back(p.first);
        cur.push_back(p.second);
    }
    t.levels.push_back(cur[0]);
    for (std::size_t k = 1; k < n; ++k) {
        const BigRat pivot = cur[k - 1];
        bool all_equal = true;
        for (std::size_t i = k; i < n; ++i) {
            if (cur[i] != pivot) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) {
            // The remaining column is constant: the fraction already passes
            // through every later node.
            return t;
        }
        for (std::size_t i = k; i < n; ++i) {
            const BigRat d = cur[i] - pivot;
            if (d == 0) {
                throw breakdown_error(k, t.nodes[i]);
            }
            cur[i] = (t.nodes[i] - t.nodes[k - 1]) / d;
        }
        t.levels.push_back(cur[k]);
    }
    return t;
}

BigRat ThieleInterpolant::eval(const BigRat& x) const {
    BigRat t = levels.back();
    for (std::size_t k = levels.size() - 1; k-- > 0;) {
        if (t == 0) {
            throw pole_error(x);
        }
        t = levels[k] + (x - nodes[k]) / t;
    }
    return t;
}

std::pair<std::vector<BigRat>, BigRat> ThieleInterpolant::folded() const {
    const std::size_t m = levels.size();
    if (m < 2) {
        throw fold_error("affine-tail fold needs at least two levels");
    }
    if (levels[m - 1] == 0) {
        throw fold_error("innermost level coefficient is zero; no affine tail");
    }
    const BigRat K = BigRat(1) / levels[m - 1];
    std::vector<BigRat> cs(levels.begin(), levels.end() - 2);
    cs.push_back(levels[m - 2] - nodes[m - 2] * K);
    return {std::move(cs), K};
}

BigRat ThieleInterpolant::eval_folded(const std::vector<BigRat>& cs, const BigRat& K,
                                      const std::vector<BigRat>& nodes, const BigRat& x) {
    BigRat t = cs.back() + K * x;
    for (std::size_t k = cs.size() - 1; k-- > 0;) {
        if (t == 0) {
            throw pole_error(x);
        }
        t = cs[k] + (x - nodes[k]) / t;
    }
    return t;
}

}  // namespace pi26
