#include "eaqec/f2_poly.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace eaqec {

F2Poly F2Poly::monomial(size_t e) {
    F2Poly p;
    p.set_coeff(e, true);
    return p;
}

F2Poly F2Poly::x_pow_minus_one(size_t e) {
    F2Poly p = monomial(e);
    p += monomial(0);
    return p;
}

F2Poly F2Poly::from_exponents(const std::vector<size_t> &exps) {
    F2Poly p;
    for (size_t e : exps) {
        p.set_coeff(e, !p.coeff(e));
    }
    return p;
}

long F2Poly::degree() const {
    if (words_.empty()) {
        return -1;
    }
    return static_cast<long>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

bool F2Poly::coeff(size_t i) const {
    size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1);
}

void F2Poly::set_coeff(size_t i, bool v) {
    size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) {
            return;
        }
        words_.resize(w + 1, 0);
    }
    if (v) {
        words_[w] |= uint64_t{1} << (i % 64);
    } else {
        words_[w] &= ~(uint64_t{1} << (i % 64));
        trim();
    }
}

size_t F2Poly::weight() const {
    size_t c = 0;
    for (uint64_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

void F2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

F2Poly &F2Poly::operator+=(const F2Poly &o) {
    if (o.words_.size() > words_.size()) {
        words_.resize(o.words_.size(), 0);
    }
    for (size_t i = 0; i < o.words_.size(); i++) {
        words_[i] ^= o.words_[i];
    }
    trim();
    return *this;
}

F2Poly F2Poly::shifted(size_t k) const {
    if (is_zero()) {
        return {};
    }
    F2Poly out;
    size_t ws = k / 64, bs = k % 64;
    out.words_.assign(words_.size() + ws + 1, 0);
    for (size_t i = 0; i < words_.size(); i++) {
        out.words_[i + ws] ^= words_[i] << bs;
        if (bs) {
            out.words_[i + ws + 1] ^= words_[i] >> (64 - bs);
        }
    }
    out.trim();
    return out;
}

F2Poly operator*(const F2Poly &a, const F2Poly &b) {
    F2Poly out;
    long da = a.degree();
    for (long i = 0; i <= da; i++) {
        if (a.coeff(static_cast<size_t>(i))) {
            out += b.shifted(static_cast<size_t>(i));
        }
    }
    return out;
}

void F2Poly::divmod(const F2Poly &a, const F2Poly &b, F2Poly &q, F2Poly &r) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    q = F2Poly();
    r = a;
    long db = b.degree();
    while (r.degree() >= db) {
        size_t s = static_cast<size_t>(r.degree() - db);
        q.set_coeff(s, true);
        r += b.shifted(s);
    }
}

F2Poly operator%(const F2Poly &a, const F2Poly &b) {
    F2Poly q, r;
    F2Poly::divmod(a, b, q, r);
    return r;
}

std::string F2Poly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string s;
    for (long i = 0; i <= degree(); i++) {
        if (!coeff(static_cast<size_t>(i))) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        s += i == 0 ? "1" : i == 1 ? "X" : "X^" + std::to_string(i);
    }
    return s;
}

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

long quotient_dimension(std::vector<std::vector<F2Poly>> rows, size_t cols, const F2Poly &m) {
    if (m.is_zero()) {
        throw std::invalid_argument("modulus must be nonzero");
    }
    long total = 0;
    for (size_t c = 0; c < cols; c++) {
        // Rows from c on are zero left of column c. Keeping m·e_k among them
        // lets every entry be reduced mod m without changing the module.
        for (size_t i = c; i < rows.size(); i++) {
            for (size_t k = c; k < cols; k++) {
                rows[i][k] = rows[i][k] % m;
            }
        }
        for (size_t k = c; k < cols; k++) {
            std::vector<F2Poly> row(cols);
            row[k] = m;
            rows.push_back(std::move(row));
        }
        while (true) {
            size_t best = rows.size();
            for (size_t i = c; i < rows.size(); i++) {
                if (!rows[i][c].is_zero() && (best == rows.size() || rows[i][c].degree() < rows[best][c].degree())) {
                    best = i;
                }
            }
            std::swap(rows[c], rows[best]);
            bool others_zero = true;
            for (size_t i = c + 1; i < rows.size(); i++) {
                if (rows[i][c].is_zero()) {
                    continue;
                }
                F2Poly q, r;
                F2Poly::divmod(rows[i][c], rows[c][c], q, r);
                for (size_t k = c; k < cols; k++) {
                    rows[i][k] += q * rows[c][k];
                }
                others_zero = others_zero && rows[i][c].is_zero();
            }
            if (others_zero) {
                break;
            }
        }
        total += rows[c][c].degree();
        // Drop rows that became zero to keep the working set small.
        std::vector<std::vector<F2Poly>> kept(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(c + 1));
        for (size_t i = c + 1; i < rows.size(); i++) {
            bool zero = true;
            for (size_t k = c + 1; k < cols && zero; k++) {
                zero = rows[i][k].is_zero();
            }
            if (!zero) {
                kept.push_back(std::move(rows[i]));
            }
        }
        rows = std::move(kept);
    }
    return total;
}

}  // namespace eaqec
