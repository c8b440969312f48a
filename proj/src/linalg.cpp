#include "gwkit/linalg.hpp"

#include "gwkit/errors.hpp"

namespace gwkit {

namespace {

/* Row echelon form in place; returns pivot columns. `rhs` (if nonnull) is carried along. */
std::vector<int> echelon(QMat& a, QVec* rhs)
{
    std::vector<int> pivots;
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        if (rhs)
            std::swap((*rhs)[piv], (*rhs)[r]);
        Q inv = Q(1) / a[r][c];
        for (size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        if (rhs)
            (*rhs)[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Q f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            if (rhs)
                (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

Q det(QMat a)
{
    size_t n = a.size();
    Q d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return Q(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        Q inv = Q(1) / a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0)
                continue;
            Q f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

int rank(QMat a)
{
    return static_cast<int>(echelon(a, nullptr).size());
}

std::optional<QVec> solve(QMat a, QVec b)
{
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    auto pivots = echelon(a, &b);
    // Consistency: zero rows must have zero rhs.
    for (size_t i = pivots.size(); i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    QVec x(cols, Q(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = b[r];
    return x;
}

QMat inverse(const QMat& a)
{
    size_t n = a.size();
    QMat aug = a;
    for (size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, Q(0));
        aug[i][n + i] = 1;
    }
    auto pivots = echelon(aug, nullptr);
    require(pivots.size() == n, Errc::DegenerateSample, "singular matrix");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace gwkit
