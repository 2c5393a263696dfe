#include "eaqec/pauli.h"

#include <fmt/format.h>

#include "eaqec/errors.h"

namespace eaqec {

PauliVec::PauliVec(BitVec z, BitVec x) : z_(std::move(z)), x_(std::move(x)) {
    if (z_.size() != x_.size()) {
        throw DimensionError("z and x parts differ in length");
    }
}

PauliVec PauliVec::from_symplectic(const BitVec &zx) {
    if (zx.size() % 2) {
        throw DimensionError("symplectic vector must have even length");
    }
    size_t n = zx.size() / 2;
    return PauliVec(zx.slice(0, n), zx.slice(n, 2 * n));
}

PauliVec PauliVec::single(size_t n, size_t q, char p) {
    PauliVec u(n);
    u.set(q, p);
    return u;
}

void PauliVec::set(size_t q, char p) {
    switch (p) {
        case 'I':
            z_.set(q, false);
            x_.set(q, false);
            break;
        case 'X':
            z_.set(q, false);
            x_.set(q, true);
            break;
        case 'Y':
            z_.set(q, true);
            x_.set(q, true);
            break;
        case 'Z':
            z_.set(q, true);
            x_.set(q, false);
            break;
        default:
            throw ParseError(fmt::format("illegal Pauli character '{}'", p));
    }
}

char PauliVec::at(size_t q) const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[(z_.get(q) << 1) | x_.get(q)];
}

PauliVec &PauliVec::operator*=(const PauliVec &other) {
    z_ ^= other.z_;
    x_ ^= other.x_;
    return *this;
}

PauliVec PauliVec::slice(size_t begin, size_t end) const {
    return PauliVec(z_.slice(begin, end), x_.slice(begin, end));
}

std::string PauliVec::str() const { return format_pauli(*this); }

bool symplectic_product(const PauliVec &u, const PauliVec &v) {
    if (u.n() != v.n()) {
        throw DimensionError(fmt::format("Pauli length mismatch: {} vs {}", u.n(), v.n()));
    }
    return u.z().dot(v.x()) ^ v.z().dot(u.x());
}

bool symplectic_product(const BitVec &u, const BitVec &v) {
    if (u.size() != v.size() || u.size() % 2) {
        throw DimensionError("symplectic vectors must share an even length");
    }
    size_t n = u.size() / 2;
    bool acc = false;
    for (size_t i = 0; i < n; i++) {
        acc ^= (u.get(i) & v.get(n + i)) ^ (v.get(i) & u.get(n + i));
    }
    return acc;
}

size_t weight(const PauliVec &u) { return (u.z() | u.x()).popcount(); }

PauliVec parse_pauli(std::string_view s) {
    std::string chars;
    size_t bars = 0;
    for (char c : s) {
        if (c == '|') {
            bars++;
            continue;
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw ParseError(fmt::format("illegal Pauli character '{}' in \"{}\"", c, s));
        }
        chars.push_back(c);
    }
    if (bars > 1) {
        throw ParseError(fmt::format("more than one '|' in \"{}\"", s));
    }
    if (chars.empty()) {
        throw ParseError("empty Pauli string");
    }
    PauliVec u(chars.size());
    for (size_t q = 0; q < chars.size(); q++) {
        u.set(q, chars[q]);
    }
    return u;
}

std::string format_pauli(const PauliVec &u) {
    std::string s(u.n(), 'I');
    for (size_t q = 0; q < u.n(); q++) {
        s[q] = u.at(q);
    }
    return s;
}

BitMatrix to_symplectic_matrix(const std::vector<PauliVec> &ops, size_t n) {
    BitMatrix m(0, 2 * n);
    for (const auto &op : ops) {
        m.append_row(op.symplectic());
    }
    return m;
}

std::vector<PauliVec> from_symplectic_matrix(const BitMatrix &m) {
    std::vector<PauliVec> ops;
    ops.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        ops.push_back(PauliVec::from_symplectic(m.row(r)));
    }
    return ops;
}

}  // namespace eaqec
