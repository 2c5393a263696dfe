#ifndef EAQEC_F2_POLY_H
#define EAQEC_F2_POLY_H

#include <cstdint>
#include <string>
#include <vector>

namespace eaqec {

/// Polynomial over GF(2); bit i holds the coefficient of X^i.
class F2Poly {
   public:
    F2Poly() = default;
    static F2Poly monomial(size_t e);
    /// X^e - 1, which over GF(2) is X^e + 1.
    static F2Poly x_pow_minus_one(size_t e);
    static F2Poly from_exponents(const std::vector<size_t> &exps);

    /// -1 for the zero polynomial.
    long degree() const;
    bool is_zero() const { return words_.empty(); }
    bool coeff(size_t i) const;
    void set_coeff(size_t i, bool v);
    size_t weight() const;

    F2Poly &operator+=(const F2Poly &o);
    friend F2Poly operator+(F2Poly a, const F2Poly &b) { return a += b; }
    friend F2Poly operator*(const F2Poly &a, const F2Poly &b);
    F2Poly shifted(size_t k) const;
    bool operator==(const F2Poly &o) const = default;

    /// Quotient and remainder; throws std::domain_error on division by zero.
    static void divmod(const F2Poly &a, const F2Poly &b, F2Poly &q, F2Poly &r);
    friend F2Poly operator%(const F2Poly &a, const F2Poly &b);

    std::string str() const;

   private:
    void trim();
    std::vector<uint64_t> words_;
};

F2Poly gcd(F2Poly a, F2Poly b);

/// dim over GF(2) of F2[X]^cols / (span(rows) + m·F2[X]^cols), i.e. the
/// degree of the determinant of a triangular basis of that module. `m` must
/// be nonzero.
long quotient_dimension(std::vector<std::vector<F2Poly>> rows, size_t cols, const F2Poly &m);

}  // namespace eaqec

#endif
