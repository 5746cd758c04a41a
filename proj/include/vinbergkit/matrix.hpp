#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "vinbergkit/algnum.hpp"

namespace vinbergkit {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using AMatrix = Matrix<AlgebraicNumber>;

inline int scalar_sign(const Rational& x, int = -1) { return x.sign(); }
inline int scalar_sign(const AlgebraicNumber& x, int root_index = -1) { return x.sign(root_index); }

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
    Matrix<Scalar> I(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) I(i, j) = Scalar(i == j ? 1 : 0);
    return I;
}

template <typename Scalar>
bool is_symmetric(const Matrix<Scalar>& M) {
    if (M.rows() != M.cols()) return false;
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = i + 1; j < M.cols(); ++j)
            if (!(M(i, j) == M(j, i))) return false;
    return true;
}

template <typename Scalar>
bool equal(const Matrix<Scalar>& A, const Matrix<Scalar>& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (!(A(i, j) == B(i, j))) return false;
    return true;
}

/// Exact product; avoids Eigen's blocked kernels, which assume cheap scalars.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& A, const Matrix<Scalar>& B) {
    Matrix<Scalar> C(A.rows(), B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < B.cols(); ++j) {
            Scalar acc(0);
            for (Eigen::Index k = 0; k < A.cols(); ++k)
                if (!is_zero(A(i, k)) && !is_zero(B(k, j))) acc += A(i, k) * B(k, j);
            C(i, j) = acc;
        }
    return C;
}

/// det(t*I - M) via reduction to upper Hessenberg form.
template <typename Scalar>
Polynomial<Scalar> characteristic_polynomial(const Matrix<Scalar>& M) {
    using P = Polynomial<Scalar>;
    const Eigen::Index n = M.rows();
    Matrix<Scalar> H = M;
    for (Eigen::Index j = 0; j + 2 < n; ++j) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = j + 1; i < n; ++i)
            if (!is_zero(H(i, j))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            H.row(piv).swap(H.row(j + 1));
            H.col(piv).swap(H.col(j + 1));
        }
        Scalar inv = Scalar(1) / H(j + 1, j);
        for (Eigen::Index i = j + 2; i < n; ++i) {
            if (is_zero(H(i, j))) continue;
            Scalar u = H(i, j) * inv;
            for (Eigen::Index k = 0; k < n; ++k)
                if (!is_zero(H(j + 1, k))) H(i, k) -= u * H(j + 1, k);
            for (Eigen::Index k = 0; k < n; ++k)
                if (!is_zero(H(k, i))) H(k, j + 1) += u * H(k, i);
        }
    }
    std::vector<P> p;
    p.push_back(P::constant(Scalar(1)));
    for (Eigen::Index k = 1; k <= n; ++k) {
        P next = P{-H(k - 1, k - 1), Scalar(1)} * p[static_cast<size_t>(k - 1)];
        Scalar prod(1);
        for (Eigen::Index i = 1; i < k; ++i) {
            prod *= H(k - i, k - i - 1);
            if (is_zero(prod)) break;
            Scalar c = H(k - i - 1, k - 1) * prod;
            if (!is_zero(c)) next -= c * p[static_cast<size_t>(k - i - 1)];
        }
        p.push_back(std::move(next));
    }
    return p.back();
}

/// Row echelon form in place; returns the rank and the determinant sign flips.
template <typename Scalar>
int row_reduce(Matrix<Scalar>& A, bool* odd_swaps = nullptr) {
    int rank = 0;
    bool odd = false;
    for (Eigen::Index c = 0; c < A.cols() && rank < A.rows(); ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = rank; r < A.rows(); ++r)
            if (!is_zero(A(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) {
            A.row(piv).swap(A.row(rank));
            odd = !odd;
        }
        Scalar inv = Scalar(1) / A(rank, c);
        for (Eigen::Index r = rank + 1; r < A.rows(); ++r) {
            if (is_zero(A(r, c))) continue;
            Scalar f = A(r, c) * inv;
            for (Eigen::Index k = c; k < A.cols(); ++k)
                if (!is_zero(A(rank, k))) A(r, k) -= f * A(rank, k);
        }
        ++rank;
    }
    if (odd_swaps) *odd_swaps = odd;
    return rank;
}

template <typename Scalar>
int rank(Matrix<Scalar> A) {
    return row_reduce(A);
}

template <typename Scalar>
Scalar determinant(Matrix<Scalar> A) {
    bool odd = false;
    if (row_reduce(A, &odd) < A.rows()) return Scalar(0);
    Scalar d(odd ? -1 : 1);
    for (Eigen::Index i = 0; i < A.rows(); ++i) d *= A(i, i);
    return d;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <typename Scalar>
std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& M) {
    const Eigen::Index n = M.rows();
    Matrix<Scalar> A = M, B = identity<Scalar>(n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = c; r < n; ++r)
            if (!is_zero(A(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        A.row(piv).swap(A.row(c));
        B.row(piv).swap(B.row(c));
        Scalar inv = Scalar(1) / A(c, c);
        for (Eigen::Index k = 0; k < n; ++k) {
            A(c, k) *= inv;
            B(c, k) *= inv;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c || is_zero(A(r, c))) continue;
            Scalar f = A(r, c);
            for (Eigen::Index k = 0; k < n; ++k) {
                if (!is_zero(A(c, k))) A(r, k) -= f * A(c, k);
                if (!is_zero(B(c, k))) B(r, k) -= f * B(c, k);
            }
        }
    }
    return B;
}

/// Congruence S^T M S = diag(diagonal).
template <typename Scalar>
struct Diagonalization {
    std::vector<Scalar> diagonal;
    Matrix<Scalar> S;
};

/// Symmetric elimination; a zero pivot with a nonzero entry in its row is
/// repaired by swapping in a nonzero diagonal entry or adding that row and
/// column. Zero rows leave zeros on the diagonal.
template <typename Scalar>
Diagonalization<Scalar> diagonalize(const Matrix<Scalar>& M) {
    const Eigen::Index n = M.rows();
    Matrix<Scalar> A = M, S = identity<Scalar>(n);
    auto swap_index = [&](Eigen::Index a, Eigen::Index b) {
        A.row(a).swap(A.row(b));
        A.col(a).swap(A.col(b));
        S.col(a).swap(S.col(b));
    };
    for (Eigen::Index k = 0; k < n; ++k) {
        if (is_zero(A(k, k))) {
            Eigen::Index diag = -1, off = -1;
            for (Eigen::Index j = k + 1; j < n; ++j) {
                if (diag < 0 && !is_zero(A(j, j))) diag = j;
                if (off < 0 && !is_zero(A(k, j))) off = j;
            }
            if (off < 0) continue;
            if (diag >= 0) {
                swap_index(k, diag);
            } else {
                for (Eigen::Index c = 0; c < n; ++c) A(k, c) += A(off, c);
                for (Eigen::Index r = 0; r < n; ++r) A(r, k) += A(r, off);
                for (Eigen::Index r = 0; r < n; ++r) S(r, k) += S(r, off);
            }
        }
        Scalar inv = Scalar(1) / A(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (is_zero(A(i, k))) continue;
            Scalar f = A(i, k) * inv;
            for (Eigen::Index c = k; c < n; ++c)
                if (!is_zero(A(k, c))) A(i, c) -= f * A(k, c);
            for (Eigen::Index r = k; r < n; ++r)
                if (!is_zero(A(r, k))) A(r, i) -= f * A(r, k);
            for (Eigen::Index r = 0; r < n; ++r)
                if (!is_zero(S(r, k))) S(r, i) -= f * S(r, k);
        }
    }
    Diagonalization<Scalar> out;
    for (Eigen::Index i = 0; i < n; ++i) out.diagonal.push_back(A(i, i));
    out.S = std::move(S);
    return out;
}

/// Checks S^T M S == diag(d) exactly.
template <typename Scalar>
bool verify_diagonalization(const Matrix<Scalar>& M, const Diagonalization<Scalar>& D) {
    Matrix<Scalar> St = D.S.transpose();
    Matrix<Scalar> R = multiply<Scalar>(multiply<Scalar>(St, M), D.S);
    for (Eigen::Index i = 0; i < R.rows(); ++i)
        for (Eigen::Index j = 0; j < R.cols(); ++j) {
            const Scalar& want = i == j ? D.diagonal[static_cast<size_t>(i)] : Scalar(0);
            if (!(R(i, j) == want)) return false;
        }
    return true;
}

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Eigenvalue sign counts of a real symmetric matrix from the signs of its
/// characteristic polynomial coefficients (all roots real, so Descartes' rule
/// is exact).
template <typename Scalar>
Signature signature_from_charpoly(const Polynomial<Scalar>& chi, int root_index = -1) {
    Signature s;
    const int n = chi.degree();
    int low = 0;
    while (low <= n && is_zero(chi[low])) ++low;
    s.zero = low;
    int last = 0, changes = 0;
    for (int k = low; k <= n; ++k) {
        int v = scalar_sign(chi[k], root_index);
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    s.positive = changes;
    s.negative = n - low - changes;
    return s;
}

template <typename Scalar>
Signature signature(const Matrix<Scalar>& M, int root_index = -1) {
    return signature_from_charpoly(characteristic_polynomial(M), root_index);
}

/// Positive semidefiniteness from (-1)^(n-k) a_k >= 0; on failure `offending`
/// holds the first violating coefficient index.
template <typename Scalar>
bool psd_from_charpoly(const Polynomial<Scalar>& chi, int root_index = -1, int* offending = nullptr) {
    const int n = chi.degree();
    for (int k = 0; k <= n; ++k) {
        int v = scalar_sign(chi[k], root_index);
        if ((n - k) % 2) v = -v;
        if (v < 0) {
            if (offending) *offending = k;
            return false;
        }
    }
    return true;
}

template <typename Scalar>
bool psd_exact(const Matrix<Scalar>& M, int root_index = -1, int* offending = nullptr) {
    return psd_from_charpoly(characteristic_polynomial(M), root_index, offending);
}

/// Coerces every entry into one common field and returns it.
FieldPtr unify_field(AMatrix& M);

QMatrix to_rational(const AMatrix& M);

}  // namespace vinbergkit
