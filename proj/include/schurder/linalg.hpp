#pragma once

// Exact dense linear algebra over Rational or ModP, as free functions on
// Eigen matrices. Over Q elimination is fraction-free (Bareiss) on rows cleared
// to integers; over GF(p) it is plain Gauss-Jordan.

#include "schurder/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <type_traits>
#include <vector>

namespace schurder {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using VecQ = Vec<Rational>;

template <typename S>
Mat<S> zeros(Eigen::Index rows, Eigen::Index cols) {
    Mat<S> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = S(0);
    return m;
}

template <typename S>
Mat<S> identity(Eigen::Index n) {
    Mat<S> m = zeros<S>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

/// Product that stays correct for empty operands and skips zero entries.
template <typename S>
Mat<S> mul(const Mat<S>& a, const Mat<S>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    Mat<S> c = zeros<S>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            const S& aik = a(i, k);
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename S>
bool is_zero_matrix(const Mat<S>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) return false;
    return true;
}

template <typename S>
struct RowEchelon {
    Mat<S> reduced;                    // reduced row echelon form, pivots equal 1
    std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

namespace detail {

inline Integer lcm_int(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    Integer g = boost::multiprecision::gcd(a, b);
    return abs(a / g * b);
}

template <typename S>
void back_substitute(Mat<S>& m, const std::vector<Eigen::Index>& pivots) {
    const Eigen::Index cols = m.cols();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Eigen::Index pc = pivots[r];
        const S inv = S(1) / m(r, pc);
        for (Eigen::Index j = 0; j < cols; ++j)
            if (!is_zero(m(r, j))) m(r, j) *= inv;
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const Eigen::Index pc = pivots[r];
        for (std::size_t above = 0; above < r; ++above) {
            if (is_zero(m(above, pc))) continue;
            const S f = m(above, pc);
            for (Eigen::Index j = pc; j < cols; ++j)
                if (!is_zero(m(r, j))) m(above, j) -= f * m(r, j);
        }
    }
}

}  // namespace detail

/// Row echelon form. Over Q the forward pass is Bareiss on integer rows.
template <typename S>
RowEchelon<S> rref(Mat<S> m) {
    RowEchelon<S> out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    if constexpr (std::is_same_v<S, Rational>) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            Integer l(1);
            for (Eigen::Index j = 0; j < cols; ++j)
                if (!m(i, j).is_zero())
                    l = detail::lcm_int(l, boost::multiprecision::denominator(m(i, j)));
            if (l != 1)
                for (Eigen::Index j = 0; j < cols; ++j) m(i, j) *= Rational(l);
        }
        Rational prev(1);
        Eigen::Index r = 0;
        for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
            Eigen::Index sel = -1;
            for (Eigen::Index i = r; i < rows; ++i)
                if (!m(i, c).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r) m.row(sel).swap(m.row(r));
            const Rational piv = m(r, c);
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                const Rational lead = m(i, c);
                for (Eigen::Index j = c + 1; j < cols; ++j)
                    m(i, j) = (m(i, j) * piv - lead * m(r, j)) / prev;
                m(i, c) = 0;
            }
            // rows above the pivot row were already reduced at their own step
            prev = piv;
            out.pivots.push_back(c);
            ++r;
        }
    } else {
        Eigen::Index r = 0;
        for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
            Eigen::Index sel = -1;
            for (Eigen::Index i = r; i < rows; ++i)
                if (!is_zero(m(i, c))) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r) m.row(sel).swap(m.row(r));
            const S inv = S(1) / m(r, c);
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (is_zero(m(i, c))) continue;
                const S f = m(i, c) * inv;
                for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
            }
            out.pivots.push_back(c);
            ++r;
        }
    }
    detail::back_substitute(m, out.pivots);
    out.reduced = std::move(m);
    return out;
}

template <typename S>
Eigen::Index rank(const Mat<S>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Basis of the right null space, one vector per column.
template <typename S>
Mat<S> kernel_basis(const Mat<S>& m) {
    const Eigen::Index cols = m.cols();
    if (m.rows() == 0) return identity<S>(cols);
    auto e = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : e.pivots) is_pivot[c] = 1;
    const Eigen::Index nfree = cols - static_cast<Eigen::Index>(e.pivots.size());
    Mat<S> k = zeros<S>(cols, nfree);
    Eigen::Index col = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        k(f, col) = S(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!is_zero(e.reduced(r, f))) k(e.pivots[r], col) = -e.reduced(r, f);
        ++col;
    }
    return k;
}

/// Basis (as columns) of the column space; the chosen columns are the pivot
/// columns of m itself.
template <typename S>
Mat<S> image_basis(const Mat<S>& m) {
    if (m.rows() == 0 || m.cols() == 0) return zeros<S>(m.rows(), 0);
    auto e = rref(m);
    Mat<S> out(m.rows(), static_cast<Eigen::Index>(e.pivots.size()));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.col(i) = m.col(e.pivots[i]);
    return out;
}

template <typename S>
struct Solution {
    Mat<S> x;                 // one particular solution
    Eigen::Index nullity = 0; // dimension of the affine solution family
};

/// Solves a*x = b exactly. Returns nullopt when the system is inconsistent.
template <typename S>
std::optional<Solution<S>> solve(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: a.rows != b.rows");
    const Eigen::Index n = a.cols(), k = b.cols();
    Mat<S> aug(a.rows(), n + k);
    aug << a, b;
    auto e = rref(aug);
    Solution<S> sol;
    sol.x = zeros<S>(n, k);
    Eigen::Index rank_a = 0;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        ++rank_a;
        for (Eigen::Index j = 0; j < k; ++j) sol.x(e.pivots[r], j) = e.reduced(r, n + j);
    }
    sol.nullity = n - rank_a;
    return sol;
}

template <typename S>
bool is_invertible(const Mat<S>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <typename S>
Mat<S> inverse(const Mat<S>& m) {
    auto s = solve<S>(m, identity<S>(m.rows()));
    if (!s || s->nullity != 0) throw std::domain_error("inverse: singular matrix");
    return s->x;
}

/// Horizontal / vertical concatenation that tolerates empty blocks.
template <typename S>
Mat<S> hcat(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    Mat<S> out(a.rows(), a.cols() + b.cols());
    if (a.cols()) out.leftCols(a.cols()) = a;
    if (b.cols()) out.rightCols(b.cols()) = b;
    return out;
}

template <typename S>
Mat<S> vcat(const Mat<S>& a, const Mat<S>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
    Mat<S> out(a.rows() + b.rows(), a.cols());
    if (a.rows()) out.topRows(a.rows()) = a;
    if (b.rows()) out.bottomRows(b.rows()) = b;
    return out;
}

template <typename S>
Mat<S> transpose(const Mat<S>& m) {
    Mat<S> t = m.transpose();
    return t;
}

/// Coordinates of the columns of v in the basis given by the columns of basis.
/// Throws if some column is outside the span.
template <typename S>
Mat<S> coordinates(const Mat<S>& basis, const Mat<S>& v) {
    auto s = solve<S>(basis, v);
    if (!s) throw std::domain_error("coordinates: vector outside the span");
    return s->x;
}

}  // namespace schurder
