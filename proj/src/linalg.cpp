#include "wha/linalg.hpp"

namespace wha {

int rref(ScalarMat& m)
{
    if (m.empty())
        return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<ScalarVec> linsolve(const ScalarMat& A, const ScalarVec& b)
{
    if (A.empty())
        return ScalarVec{};
    size_t rows = A.size(), cols = A[0].size();
    ScalarMat aug = A;
    for (size_t i = 0; i < rows; ++i)
        aug[i].push_back(b[i]);
    rref(aug);
    // Inconsistent iff a row is (0 ... 0 | nonzero).
    ScalarVec x(cols, Scalar(0));
    for (size_t i = 0; i < rows; ++i) {
        size_t lead = cols + 1;
        for (size_t j = 0; j <= cols; ++j) {
            if (!aug[i][j].is_zero()) {
                lead = j;
                break;
            }
        }
        if (lead == cols)
            return std::nullopt;
        if (lead > cols)
            continue;
        x[lead] = aug[i][cols]; // free variables stay 0
    }
    return x;
}

std::vector<ScalarVec> nullspace(const ScalarMat& A)
{
    if (A.empty())
        return {};
    size_t cols = A[0].size();
    ScalarMat m = A;
    rref(m);
    std::vector<long> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        size_t lead = cols;
        for (size_t j = 0; j < cols; ++j) {
            if (!m[i][j].is_zero()) {
                lead = j;
                break;
            }
        }
        if (lead < cols)
            pivot_of_col[lead] = static_cast<long>(i);
        (void)r;
    }
    std::vector<ScalarVec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0)
            continue;
        ScalarVec v(cols, Scalar(0));
        v[free_col] = Scalar(1);
        for (size_t j = 0; j < cols; ++j) {
            long pr = pivot_of_col[j];
            if (pr >= 0)
                v[j] = -m[static_cast<size_t>(pr)][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace wha
