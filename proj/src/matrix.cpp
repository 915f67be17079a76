#include "rankbarriers/matrix.hpp"

namespace rankbarriers {

Matrix<Fp> matrix_mod(const Matrix<Rational>& m, std::uint64_t p) {
    Matrix<Fp> out(m.rows(), m.cols(), Fp(0, p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = reduce_mod(m.at(i, j), p);
    return out;
}

} // namespace rankbarriers
