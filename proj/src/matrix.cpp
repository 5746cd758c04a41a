#include "vinbergkit/matrix.hpp"

namespace vinbergkit {

FieldPtr unify_field(AMatrix& M) {
    std::vector<AlgebraicNumber> all;
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) all.push_back(M(i, j));
    FieldPtr F = common_field(all);
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) M(i, j) = *coerce(M(i, j), F);
    return F;
}

QMatrix to_rational(const AMatrix& M) {
    QMatrix Q(M.rows(), M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) Q(i, j) = M(i, j).to_rational();
    return Q;
}

}  // namespace vinbergkit
