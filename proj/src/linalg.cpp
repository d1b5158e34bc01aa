#include "polycal/linalg.hpp"

namespace polycal {

std::vector<int> rref(RatMat& M) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int p = -1;
        for (int i = r; i < M.rows(); ++i) {
            if (M(i, c) != 0) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < M.cols(); ++j) std::swap(M(p, j), M(r, j));
        Rat inv = Rat(1) / M(r, c);
        for (int j = 0; j < M.cols(); ++j) M(r, j) *= inv;
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == 0) continue;
            Rat f = M(i, c);
            for (int j = 0; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

int rank(const RatMat& M) {
    RatMat tmp = M;
    return static_cast<int>(rref(tmp).size());
}

std::vector<RatVec> nullspace_basis(const RatMat& M) {
    RatMat R = M;
    std::vector<int> pivots = rref(R);
    std::vector<bool> is_pivot(static_cast<size_t>(M.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<RatVec> basis;
    for (int c = 0; c < M.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        RatVec v(M.cols());
        v[c] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -R(static_cast<int>(pr), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_linear(const RatMat& M, const RatVec& b, RatVec& x) {
    if (M.rows() != b.dim()) throw DimensionMismatchError();
    RatMat aug(M.rows(), M.cols() + 1);
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
        aug(i, M.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == M.cols()) return false; // row [0 ... 0 | 1]
    x = RatVec(M.cols());
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        x[pivots[pr]] = aug(static_cast<int>(pr), M.cols());
    return true;
}

} // namespace polycal
