#include "eaqec/qc_ldpc.h"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "eaqec/errors.h"

namespace eaqec {

CircPoly CircPoly::monomial(size_t r, size_t e) {
    CircPoly p(r);
    p.coeffs_.set(e % r, true);
    return p;
}

CircPoly CircPoly::from_poly(size_t r, const F2Poly &p) {
    CircPoly out(r);
    for (long i = 0; i <= p.degree(); i++) {
        if (p.coeff(static_cast<size_t>(i))) {
            out.coeffs_.flip(static_cast<size_t>(i) % r);
        }
    }
    return out;
}

CircPoly &CircPoly::operator+=(const CircPoly &o) {
    if (o.r_ != r_) {
        throw DimensionError("circulant sizes differ");
    }
    coeffs_ ^= o.coeffs_;
    return *this;
}

CircPoly operator*(const CircPoly &a, const CircPoly &b) {
    if (a.r_ != b.r_) {
        throw DimensionError("circulant sizes differ");
    }
    CircPoly out(a.r_);
    for (size_t i = 0; i < a.r_; i++) {
        if (a.coeff(i)) {
            out.coeffs_ ^= b.coeffs_.block_rotate(a.r_, i);
        }
    }
    return out;
}

CircPoly CircPoly::transpose() const {
    CircPoly out(r_);
    for (size_t i = 0; i < r_; i++) {
        if (coeff(i)) {
            out.coeffs_.set((r_ - i) % r_, true);
        }
    }
    return out;
}

F2Poly CircPoly::to_poly() const {
    F2Poly p;
    for (size_t i = 0; i < r_; i++) {
        if (coeff(i)) {
            p.set_coeff(i, true);
        }
    }
    return p;
}

BitMatrix CircPoly::to_matrix() const {
    BitMatrix m(0, r_);
    for (size_t s = 0; s < r_; s++) {
        m.append_row(coeffs_.block_rotate(r_, s));
    }
    return m;
}

size_t circ_rank(const CircPoly &p) {
    F2Poly g = gcd(p.to_poly(), F2Poly::x_pow_minus_one(p.r()));
    return p.r() - static_cast<size_t>(g.degree());
}

std::vector<size_t> ExponentEntry::exponents() const {
    switch (kind) {
        case Kind::zero:
            return {};
        case Kind::monomial:
            return {e1};
        case Kind::binomial:
            return {e1, e2};
    }
    return {};
}

std::string ExponentEntry::str() const {
    switch (kind) {
        case Kind::zero:
            return "-";
        case Kind::monomial:
            return std::to_string(e1);
        case Kind::binomial:
            return fmt::format("{}+{}", e1, e2);
    }
    return "-";
}

ExponentMatrix::ExponentMatrix(size_t r_, std::vector<std::vector<ExponentEntry>> rows)
    : r(r_), J(rows.size()), L(rows.empty() ? 0 : rows.front().size()), entries(std::move(rows)) {
    if (r == 0) {
        throw std::invalid_argument("circulant size must be positive");
    }
    for (const auto &row : entries) {
        if (row.size() != L) {
            throw DimensionError("exponent matrix rows differ in length");
        }
        for (const auto &e : row) {
            for (size_t x : e.exponents()) {
                if (x >= r) {
                    throw std::invalid_argument(fmt::format("exponent {} not below r = {}", x, r));
                }
            }
            if (e.kind == ExponentEntry::Kind::binomial && e.e1 == e.e2) {
                throw std::invalid_argument("binomial exponents must differ");
            }
        }
    }
}

ExponentMatrix ExponentMatrix::from_exponents(size_t r, const std::vector<std::vector<size_t>> &rows) {
    std::vector<std::vector<ExponentEntry>> entries;
    for (const auto &row : rows) {
        std::vector<ExponentEntry> out;
        for (size_t e : row) {
            out.push_back(ExponentEntry::mono(e));
        }
        entries.push_back(std::move(out));
    }
    return ExponentMatrix(r, std::move(entries));
}

bool ExponentMatrix::is_type_one() const {
    for (const auto &row : entries) {
        for (const auto &e : row) {
            if (e.kind != ExponentEntry::Kind::monomial) {
                return false;
            }
        }
    }
    return true;
}

CircPoly ExponentMatrix::poly(size_t j, size_t l) const {
    CircPoly p(r);
    for (size_t e : entries[j][l].exponents()) {
        p.flip(e);
    }
    return p;
}

std::vector<std::vector<CircPoly>> ExponentMatrix::poly_matrix() const {
    std::vector<std::vector<CircPoly>> out(J);
    for (size_t j = 0; j < J; j++) {
        for (size_t l = 0; l < L; l++) {
            out[j].push_back(poly(j, l));
        }
    }
    return out;
}

BitMatrix expand(const ExponentMatrix &e) {
    BitMatrix h(e.J * e.r, e.L * e.r);
    for (size_t j = 0; j < e.J; j++) {
        for (size_t l = 0; l < e.L; l++) {
            for (size_t x : e.at(j, l).exponents()) {
                for (size_t s = 0; s < e.r; s++) {
                    size_t col = l * e.r + (s + x) % e.r;
                    h.set(j * e.r + s, col, !h.get(j * e.r + s, col));
                }
            }
        }
    }
    return h;
}

namespace {

ExponentEntry parse_entry(const std::string &tok, size_t r) {
    auto parse_int = [&](const std::string &s) -> size_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError(fmt::format("malformed exponent entry '{}'", tok));
        }
        size_t v = std::stoul(s);
        if (v >= r) {
            throw ParseError(fmt::format("exponent {} not below r = {}", v, r));
        }
        return v;
    };
    if (tok == "-") {
        return ExponentEntry::none();
    }
    auto plus = tok.find('+');
    if (plus == std::string::npos) {
        return ExponentEntry::mono(parse_int(tok));
    }
    size_t a = parse_int(tok.substr(0, plus));
    size_t b = parse_int(tok.substr(plus + 1));
    if (a == b) {
        throw ParseError(fmt::format("binomial '{}' repeats its exponent", tok));
    }
    return ExponentEntry::bi(a, b);
}

}  // namespace

ExponentMatrix read_exponent_matrix(std::istream &in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            lines.push_back(line);
        }
    }
    if (lines.empty()) {
        throw ParseError("empty exponent matrix file");
    }
    std::istringstream header(lines.front());
    long r = 0, J = 0, L = 0;
    std::string extra;
    if (!(header >> r >> J >> L) || (header >> extra) || r < 1 || J < 1 || L < 1) {
        throw ParseError("exponent matrix header must be 'r J L' with positive values");
    }
    if (lines.size() - 1 != static_cast<size_t>(J)) {
        throw ParseError(fmt::format("expected {} rows, found {}", J, lines.size() - 1));
    }
    std::vector<std::vector<ExponentEntry>> rows;
    for (size_t j = 1; j < lines.size(); j++) {
        std::istringstream ss(lines[j]);
        std::vector<ExponentEntry> row;
        std::string tok;
        while (ss >> tok) {
            row.push_back(parse_entry(tok, static_cast<size_t>(r)));
        }
        if (row.size() != static_cast<size_t>(L)) {
            throw ParseError(fmt::format("row {} has {} entries, expected {}", j, row.size(), L));
        }
        rows.push_back(std::move(row));
    }
    return ExponentMatrix(static_cast<size_t>(r), std::move(rows));
}

void write_exponent_matrix(std::ostream &out, const ExponentMatrix &e) {
    out << e.r << ' ' << e.J << ' ' << e.L << '\n';
    for (const auto &row : e.entries) {
        for (size_t l = 0; l < row.size(); l++) {
            out << (l ? " " : "") << row[l].str();
        }
        out << '\n';
    }
}

DifferenceVector row_difference(const ExponentMatrix &e, size_t i, size_t j) {
    if (i >= e.J || j >= e.J) {
        throw std::out_of_range("row index out of range");
    }
    DifferenceVector d(e.L);
    for (size_t l = 0; l < e.L; l++) {
        for (size_t a : e.at(i, l).exponents()) {
            for (size_t b : e.at(j, l).exponents()) {
                d[l].push_back((a + e.r - b) % e.r);
            }
        }
    }
    return d;
}

namespace {

std::vector<size_t> residue_counts(const DifferenceVector &d, bool skip_zero) {
    size_t max = 0;
    for (const auto &col : d) {
        for (size_t v : col) {
            max = std::max(max, v + 1);
        }
    }
    std::vector<size_t> counts(max, 0);
    for (const auto &col : d) {
        for (size_t v : col) {
            if (!(skip_zero && v == 0)) {
                counts[v]++;
            }
        }
    }
    return counts;
}

}  // namespace

bool is_multiplicity_even(const DifferenceVector &d) {
    auto counts = residue_counts(d, false);
    return std::all_of(counts.begin(), counts.end(), [](size_t c) { return c % 2 == 0; });
}

bool is_multiplicity_free(const DifferenceVector &d) {
    auto counts = residue_counts(d, false);
    return std::all_of(counts.begin(), counts.end(), [](size_t c) { return c <= 1; });
}

bool girth_ge_6(const ExponentMatrix &e) {
    for (size_t i = 0; i < e.J; i++) {
        for (size_t j = i; j < e.J; j++) {
            auto counts = residue_counts(row_difference(e, i, j), i == j);
            if (std::any_of(counts.begin(), counts.end(), [](size_t c) { return c > 1; })) {
                return false;
            }
        }
    }
    return true;
}

bool dual_containing_qc(const ExponentMatrix &e) {
    for (size_t i = 0; i < e.J; i++) {
        for (size_t j = i; j < e.J; j++) {
            if (!is_multiplicity_even(row_difference(e, i, j))) {
                return false;
            }
        }
    }
    return true;
}

std::optional<size_t> girth_exact(const BitMatrix &h) {
    size_t m = h.rows(), n = h.cols();
    std::vector<std::vector<size_t>> adj(m + n);
    for (size_t c = 0; c < m; c++) {
        for (size_t b = 0; b < n; b++) {
            if (h.get(c, b)) {
                adj[c].push_back(m + b);
                adj[m + b].push_back(c);
            }
        }
    }
    size_t best = std::numeric_limits<size_t>::max();
    std::vector<long> dist(m + n);
    std::vector<size_t> parent(m + n);
    for (size_t s = 0; s < m + n; s++) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = s;
        std::queue<size_t> q;
        q.push(s);
        while (!q.empty()) {
            size_t u = q.front();
            q.pop();
            if (static_cast<size_t>(2 * dist[u] + 1) >= best) {
                break;
            }
            for (size_t v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (parent[u] != v) {
                    best = std::min(best, static_cast<size_t>(dist[u] + dist[v] + 1));
                }
            }
        }
    }
    if (best == std::numeric_limits<size_t>::max()) {
        return std::nullopt;
    }
    return best;
}

std::vector<std::vector<CircPoly>> hermitian_poly_product(const ExponentMatrix &e) {
    auto h = e.poly_matrix();
    std::vector<std::vector<CircPoly>> out(e.J, std::vector<CircPoly>(e.J, CircPoly(e.r)));
    for (size_t i = 0; i < e.J; i++) {
        for (size_t j = 0; j < e.J; j++) {
            for (size_t l = 0; l < e.L; l++) {
                out[i][j] += h[i][l] * h[j][l].transpose();
            }
        }
    }
    return out;
}

size_t gcd_degree(const std::vector<std::vector<CircPoly>> &grid) {
    if (grid.empty() || grid.front().empty()) {
        return 0;
    }
    size_t cols = grid.front().size();
    size_t r = grid.front().front().r();
    std::vector<std::vector<F2Poly>> rows;
    for (const auto &g : grid) {
        std::vector<F2Poly> row;
        for (const auto &p : g) {
            row.push_back(p.to_poly());
        }
        rows.push_back(std::move(row));
    }
    return static_cast<size_t>(quotient_dimension(std::move(rows), cols, F2Poly::x_pow_minus_one(r)));
}

size_t block_rank(const std::vector<std::vector<CircPoly>> &grid) {
    if (grid.empty() || grid.front().empty()) {
        return 0;
    }
    return grid.front().size() * grid.front().front().r() - gcd_degree(grid);
}

size_t rank_bound(const ExponentMatrix &e) {
    auto hhat = hermitian_poly_product(e);
    size_t sum_max = 0;
    for (size_t i = 0; i < e.J; i++) {
        size_t row_max = 0;
        for (size_t j = 0; j < e.J; j++) {
            row_max = std::max(row_max, circ_rank(hhat[i][j]));
        }
        sum_max += row_max;
    }
    size_t bound = sum_max;
    if (e.is_type_one() && e.L % 2 == 0 && e.L <= e.r + 1) {
        F2Poly modulus = F2Poly::x_pow_minus_one(e.r);
        bool gcd_nontrivial = true;
        for (size_t i = 0; i < e.J && gcd_nontrivial; i++) {
            for (size_t j = 0; j < e.J; j++) {
                if (i != j && gcd(hhat[i][j].to_poly(), modulus).degree() < 1) {
                    gcd_nontrivial = false;
                    break;
                }
            }
        }
        if (gcd_nontrivial) {
            bound = std::min(bound, e.J * (e.r - e.L + 1));
        }
    }
    return bound;
}

ExponentMatrix make_ex1() {
    return ExponentMatrix::from_exponents(16, {
                                                  {1, 1, 1, 1, 1, 1, 1, 1},
                                                  {1, 2, 3, 4, 5, 6, 7, 8},
                                                  {1, 3, 5, 7, 9, 11, 13, 15},
                                              });
}

ExponentMatrix make_ex2() {
    using E = ExponentEntry;
    return ExponentMatrix(16, {
                                  {E::bi(1, 2), E::none(), E::bi(1, 4), E::none(), E::bi(1, 6), E::none(), E::bi(1, 8),
                                   E::none()},
                                  {E::mono(5), E::mono(5), E::mono(6), E::mono(6), E::mono(7), E::mono(7), E::mono(8),
                                   E::mono(8)},
                                  {E::none(), E::bi(1, 2), E::none(), E::bi(1, 4), E::none(), E::bi(1, 6), E::none(),
                                   E::bi(1, 8)},
                              });
}

BitMatrix make_ex_mackay(size_t n, size_t m, size_t L, uint64_t seed, bool reject_4cycles) {
    if (n == 0 || n % 2 || L == 0 || L % 2 || L / 2 > n / 2 || m > n / 2) {
        throw std::invalid_argument(fmt::format("invalid MacKay parameters n={} m={} L={}", n, m, L));
    }
    size_t half = n / 2;
    std::mt19937_64 rng(seed);
    constexpr int kMaxDraws = 1000;
    for (int draw = 0; draw < kMaxDraws; draw++) {
        std::vector<size_t> cols(half);
        std::iota(cols.begin(), cols.end(), 0);
        for (size_t i = 0; i < L / 2; i++) {
            std::uniform_int_distribution<size_t> pick(i, half - 1);
            std::swap(cols[i], cols[pick(rng)]);
        }
        CircPoly c(half);
        for (size_t i = 0; i < L / 2; i++) {
            c.flip(cols[i]);
        }
        BitMatrix h = c.to_matrix().hstack(c.transpose().to_matrix()).row_range(0, m);
        if (!reject_4cycles) {
            return h;
        }
        auto g = girth_exact(h);
        if (!g || *g >= 6) {
            return h;
        }
    }
    throw std::runtime_error("no 4-cycle-free MacKay matrix found");
}

namespace {

size_t mod_pow(size_t base, size_t exp, size_t mod) {
    size_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) {
            result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

size_t euler_phi(size_t n) {
    size_t result = n;
    for (size_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

}  // namespace

HiPair make_ex_hi(size_t J, size_t L, size_t P, size_t sigma, size_t tau) {
    if (P <= 2) {
        throw std::invalid_argument("P must exceed 2");
    }
    if (L == 0 || L % 2) {
        throw std::invalid_argument("L must be even and positive");
    }
    if (std::gcd(sigma, P) != 1) {
        throw std::invalid_argument("sigma must be a unit mod P");
    }
    size_t ord = 1;
    while (mod_pow(sigma, ord, P) != 1) {
        ord++;
    }
    if (ord != L / 2) {
        throw std::invalid_argument(fmt::format("ord(sigma) = {} but L/2 = {}", ord, L / 2));
    }
    if (ord == euler_phi(P)) {
        throw std::invalid_argument("sigma must not generate the whole unit group");
    }
    if (tau % P == 0) {
        throw std::invalid_argument("tau must be nonzero mod P");
    }
    for (size_t k = 0; k < ord; k++) {
        if (mod_pow(sigma, k, P) == tau % P) {
            throw std::invalid_argument("tau must lie outside the subgroup generated by sigma");
        }
    }
    if (J < 1 || J > L / 2) {
        throw std::invalid_argument("J must satisfy 1 <= J <= L/2");
    }
    // σ^e for a signed exponent e, reduced mod ord(σ).
    auto spow = [&](long e) {
        long o = static_cast<long>(ord);
        return mod_pow(sigma, static_cast<size_t>(((e % o) + o) % o), P);
    };
    auto neg = [&](size_t v) { return (P - v % P) % P; };
    long half = static_cast<long>(L / 2);
    std::vector<std::vector<size_t>> hc(J), hd(J);
    for (size_t row = 0; row < J; row++) {
        long j = static_cast<long>(row);
        for (long l = 0; l < static_cast<long>(L); l++) {
            if (l < half) {
                hc[row].push_back(spow(-j + l));
                hd[row].push_back(tau % P * spow(-j - 1 + l) % P);
            } else {
                hc[row].push_back(neg(tau % P * spow(j - 1 + l) % P));
                hd[row].push_back(neg(spow(j + l)));
            }
        }
    }
    return {ExponentMatrix::from_exponents(P, hc), ExponentMatrix::from_exponents(P, hd)};
}

}  // namespace eaqec
