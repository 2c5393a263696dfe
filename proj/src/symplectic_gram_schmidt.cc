#include "eaqec/symplectic_gram_schmidt.h"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "eaqec/errors.h"

namespace eaqec {

namespace {

// Precomputed (x|z) copy so that u ⊙ v is a plain dot product.
struct Vec {
    BitVec zx;
    BitVec xz;

    explicit Vec(BitVec v) : zx(std::move(v)) {
        size_t n = zx.size() / 2;
        xz = zx.slice(n, 2 * n).concat(zx.slice(0, n));
    }
    bool sp(const Vec &o) const { return zx.dot(o.xz); }
    void add(const Vec &o) {
        zx ^= o.zx;
        xz ^= o.xz;
    }
};

}  // namespace

GroupDecomposition decompose(const std::vector<PauliVec> &basis, size_t n) {
    for (const auto &b : basis) {
        if (b.n() != n) {
            throw DimensionError("all vectors must act on the same number of qubits");
        }
    }

    // w_1..w_m spans V, w_{m+1}..w_{2n} completes the basis.
    std::vector<Vec> w;
    RowSpace seen(2 * n);
    for (const auto &b : basis) {
        BitVec v = b.symplectic();
        if (seen.insert(v)) {
            w.emplace_back(std::move(v));
        }
    }
    size_t m_prime = w.size();
    for (size_t i = 0; i < 2 * n && w.size() < 2 * n; i++) {
        BitVec e(2 * n);
        e.set(i, true);
        if (seen.insert(e)) {
            w.emplace_back(std::move(e));
        }
    }
    assert(w.size() == 2 * n);

    GroupDecomposition out;
    out.n = n;
    for (size_t round = 0; round < n; round++) {
        Vec u = w[0];
        bool u_in_v = m_prime >= 1;
        size_t j = 1;
        while (j < w.size() && !u.sp(w[j])) {
            j++;
        }
        if (j == w.size()) {
            throw std::logic_error("symplectic Gram-Schmidt: no partner found");
        }
        Vec v = w[j];
        // 1-based index j+1 <= m' means the partner lies in V.
        bool v_in_v = j + 1 <= m_prime;

        std::vector<Vec> next;
        next.reserve(w.size() - 2);
        auto orthogonalize = [&](Vec wk) {
            bool a = v.sp(wk);
            bool b = u.sp(wk);
            if (a) {
                wk.add(u);
            }
            if (b) {
                wk.add(v);
            }
            next.push_back(std::move(wk));
        };
        if (v_in_v) {
            std::swap(w[j], w[1]);
            for (size_t k = 2; k < w.size(); k++) {
                orthogonalize(std::move(w[k]));
            }
            m_prime -= 2;
        } else {
            std::swap(w[j], w.back());
            for (size_t k = 1; k + 1 < w.size(); k++) {
                orthogonalize(std::move(w[k]));
            }
            if (m_prime >= 1) {
                m_prime -= 1;
            }
        }
        w = std::move(next);

        PauliVec pu = PauliVec::from_symplectic(u.zx);
        PauliVec pv = PauliVec::from_symplectic(v.zx);
        if (u_in_v && v_in_v) {
            out.pairs.push_back({std::move(pu), std::move(pv)});
        } else if (u_in_v) {
            out.isotropic.push_back(std::move(pu));
            out.isotropic_partners.push_back(std::move(pv));
        } else {
            out.outside.push_back({std::move(pu), std::move(pv)});
        }
    }
    return out;
}

GroupDecomposition decompose(const std::vector<PauliVec> &basis) {
    if (basis.empty()) {
        throw std::invalid_argument("cannot infer qubit count from an empty basis");
    }
    return decompose(basis, basis.front().n());
}

size_t symp_dim(const std::vector<PauliVec> &basis, size_t n) { return decompose(basis, n).c(); }

}  // namespace eaqec
