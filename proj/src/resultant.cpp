#include "germlab/resultant.hpp"

namespace germlab {

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, const Ring& ring) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, Rational(1));
    int sign = 1;
    Polynomial prev = Polynomial::constant(ring, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial::zero(ring);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? num : divide_exact(num, prev);
            }
            m[i][k] = Polynomial::zero(ring);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, const std::string& var) {
    require_same_ring(a.ring(), b.ring());
    require(!a.is_zero() && !b.is_zero(), "algebra.ZeroPolynomial",
            "resultant of zero polynomial");
    const Ring& ring = a.ring();
    std::size_t v = ring.index_checked(var);
    long da = a.degree_in(v);
    long db = b.degree_in(v);
    require(da > 0 || db > 0, "algebra.BothConstantInVar",
            "resultant: neither input involves " + var);

    // Res(a, b) = b^deg(a) when b is constant in var (and symmetrically).
    if (db == 0) return b.pow(static_cast<unsigned long>(da));
    if (da == 0) return a.pow(static_cast<unsigned long>(db));

    auto ca = a.coefficients_in(v);
    auto cb = b.coefficients_in(v);
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<Polynomial>> syl(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (std::size_t r = 0; r < static_cast<std::size_t>(db); ++r)
        for (long j = 0; j <= da; ++j) syl[r][r + static_cast<std::size_t>(j)] = ca[static_cast<std::size_t>(da - j)];
    for (std::size_t r = 0; r < static_cast<std::size_t>(da); ++r)
        for (long j = 0; j <= db; ++j)
            syl[static_cast<std::size_t>(db) + r][r + static_cast<std::size_t>(j)] = cb[static_cast<std::size_t>(db - j)];
    return bareiss_determinant(std::move(syl), ring);
}

}  // namespace germlab
