#include "nichols/linalg.hpp"

#include "nichols/errors.hpp"

#include <stdexcept>

namespace nichols {

Echelon rref(DenseMatrix m)
{
    Echelon out;
    if (m.empty()) return out;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Scalar inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c)
            if (!m[row][c].is_zero()) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Scalar f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
        }
        out.pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

int rank(const DenseMatrix& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

int rank(const OperatorMatrix& m)
{
    return rank(m.to_dense());
}

std::vector<std::vector<Scalar>> kernel(const DenseMatrix& m, std::size_t cols)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[static_cast<std::size_t>(e.pivots[r])] = -e.rows[r][f];
        std::size_t first = 0;
        while (v[first].is_zero()) ++first;
        if (!v[first].is_one()) {
            const Scalar inv = v[first].inverse();
            for (auto& x : v)
                if (!x.is_zero()) x *= inv;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<TensorVector> kernel(const OperatorMatrix& m)
{
    std::vector<TensorVector> out;
    for (const auto& v : kernel(m.to_dense(), m.size())) out.push_back(m.vector_from(v));
    return out;
}

std::vector<Scalar> solve(const DenseMatrix& m, const std::vector<Scalar>& b)
{
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    DenseMatrix aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    Echelon e = rref(std::move(aug));
    std::vector<Scalar> x(cols);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (static_cast<std::size_t>(e.pivots[r]) == cols) throw NoSolution();
        x[static_cast<std::size_t>(e.pivots[r])] = e.rows[r][cols];
    }
    return x;
}

TensorVector solve(const OperatorMatrix& m, const TensorVector& b)
{
    return m.vector_from(solve(m.to_dense(), m.coords(b)));
}

DenseMatrix inverse(const DenseMatrix& m)
{
    const std::size_t n = m.size();
    DenseMatrix aug = m;
    for (std::size_t r = 0; r < n; ++r) {
        aug[r].resize(2 * n);
        aug[r][n + r] = 1;
    }
    Echelon e = rref(std::move(aug));
    if (e.rows.size() < n || static_cast<std::size_t>(e.pivots[n - 1]) != n - 1) throw SingularMatrix();
    DenseMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) out[r].assign(e.rows[r].begin() + static_cast<std::ptrdiff_t>(n), e.rows[r].end());
    return out;
}

OperatorMatrix inverse(const OperatorMatrix& m)
{
    if (m.size() == 0) return m;
    DenseMatrix inv = inverse(m.to_dense());
    OperatorMatrix out(m.class_ptr());
    for (std::size_t i = 0; i < inv.size(); ++i)
        for (std::size_t j = 0; j < inv.size(); ++j) out.add(static_cast<int>(i), static_cast<int>(j), inv[i][j]);
    return out;
}

OperatorMatrix invert_one_minus_monomial(const OperatorMatrix& m)
{
    if (!m.is_monomial()) throw std::invalid_argument("invert_one_minus_monomial: matrix is not monomial");
    const std::size_t n = m.size();
    std::vector<int> next(n);
    std::vector<Scalar> scale(n);
    for (std::size_t j = 0; j < n; ++j) {
        next[j] = m.column(j).begin()->first;
        scale[j] = m.column(j).begin()->second;
    }
    OperatorMatrix out(m.class_ptr());
    std::vector<bool> done(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (done[start]) continue;
        std::vector<std::size_t> cycle;
        Scalar lambda = 1;
        for (std::size_t j = start; !done[j]; j = static_cast<std::size_t>(next[j])) {
            done[j] = true;
            cycle.push_back(j);
            lambda *= scale[j];
        }
        const Scalar denom = Scalar(1) - lambda;
        if (denom.is_zero())
            throw SingularFactor("I - M is singular on a cycle of length " + std::to_string(cycle.size()) +
                                 " (scalar product 1)");
        const Scalar factor = denom.inverse();
        // Column j_t of (sum_{k<l} M^k)/(1 - lambda): M^k e_{j_t} walks k steps along the cycle.
        for (std::size_t t = 0; t < cycle.size(); ++t) {
            std::size_t j = cycle[t];
            Scalar acc = factor;
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                out.add(static_cast<int>(j), static_cast<int>(cycle[t]), acc);
                acc *= scale[j];
                j = static_cast<std::size_t>(next[j]);
            }
        }
    }
    return out;
}

OperatorMatrix invert_one_minus_monomial(const GroupAlgebraElement& factor, const ClassPtr& cls,
                                         const BraidingSpec& spec)
{
    const BraidWord* word = nullptr;
    bool has_one = false;
    for (const auto& [w, c] : factor.terms()) {
        if (w.empty() && c.is_one())
            has_one = true;
        else if (!w.empty() && c == Scalar(-1) && word == nullptr)
            word = &w;
        else
            throw std::invalid_argument("factor is not of the form 1 - (braid word)");
    }
    if (!has_one || word == nullptr) throw std::invalid_argument("factor is not of the form 1 - (braid word)");
    return invert_one_minus_monomial(operator_matrix(*word, cls, spec));
}

std::vector<TensorVector> row_reduce(const std::vector<TensorVector>& vectors, const ClassPtr& cls)
{
    OperatorMatrix frame(cls);
    DenseMatrix rows;
    for (const auto& v : vectors) rows.push_back(frame.coords(v));
    std::vector<TensorVector> out;
    for (const auto& r : rref(std::move(rows)).rows) out.push_back(frame.vector_from(r));
    return out;
}

}  // namespace nichols
