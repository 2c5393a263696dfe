#include "eaqec/gf4.h"

#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "eaqec/errors.h"

namespace eaqec {

namespace {

// Discrete log base w of the nonzero elements, indexed by code.
constexpr int kLog[4] = {-1, 2, 1, 0};
constexpr uint8_t kExp[3] = {0b11, 0b10, 0b01};

}  // namespace

F4 F4::from_char(char c) {
    switch (c) {
        case '0':
            return zero();
        case '1':
            return one();
        case 'w':
            return w();
        case 'W':
            return wbar();
        default:
            throw ParseError(fmt::format("illegal GF(4) symbol '{}'", c));
    }
}

std::vector<F4> F4::all() { return {zero(), wbar(), one(), w()}; }

char F4::symbol() const {
    switch (code_) {
        case 0b00:
            return '0';
        case 0b11:
            return '1';
        case 0b10:
            return 'w';
        default:
            return 'W';
    }
}

F4 F4::conj() const {
    // Frobenius a -> a², which swaps w and W.
    return *this * *this;
}

bool F4::trace() const { return code_ == 0b10 || code_ == 0b01; }

F4 operator*(F4 a, F4 b) {
    if (a.is_zero() || b.is_zero()) {
        return F4::zero();
    }
    return F4(kExp[(kLog[a.code_] + kLog[b.code_]) % 3]);
}

F4 F4::inverse() const {
    if (is_zero()) {
        throw std::domain_error("zero has no inverse in GF(4)");
    }
    return F4(kExp[(3 - kLog[code_]) % 3]);
}

bool trace_inner(F4 a, F4 b) { return (a.conj() * b).trace(); }

F4Matrix::F4Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

F4Matrix F4Matrix::from_rows(const std::vector<std::string> &rows) {
    std::vector<std::vector<F4>> parsed;
    for (const auto &r : rows) {
        std::istringstream ss(r);
        std::vector<F4> entries;
        std::string tok;
        while (ss >> tok) {
            if (tok.size() != 1) {
                throw ParseError(fmt::format("illegal GF(4) symbol '{}'", tok));
            }
            entries.push_back(F4::from_char(tok[0]));
        }
        if (!parsed.empty() && entries.size() != parsed.front().size()) {
            throw ParseError("GF(4) rows have different lengths");
        }
        parsed.push_back(std::move(entries));
    }
    F4Matrix m(parsed.size(), parsed.empty() ? 0 : parsed.front().size());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            m.set(r, c, parsed[r][c]);
        }
    }
    return m;
}

std::vector<F4> F4Matrix::row(size_t r) const {
    return std::vector<F4>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

F4Matrix F4Matrix::scaled(F4 s) const {
    F4Matrix out = *this;
    for (auto &e : out.data_) {
        e = s * e;
    }
    return out;
}

F4Matrix F4Matrix::vstack(const F4Matrix &below) const {
    if (below.cols_ != cols_) {
        throw DimensionError("vstack column mismatch");
    }
    F4Matrix out = *this;
    out.rows_ += below.rows_;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    return out;
}

size_t rank_f4(const F4Matrix &m) {
    F4Matrix a = m;
    size_t lead = 0;
    for (size_t c = 0; c < a.cols() && lead < a.rows(); c++) {
        size_t pivot = lead;
        while (pivot < a.rows() && a.get(pivot, c).is_zero()) {
            pivot++;
        }
        if (pivot == a.rows()) {
            continue;
        }
        for (size_t k = 0; k < a.cols(); k++) {
            F4 tmp = a.get(lead, k);
            a.set(lead, k, a.get(pivot, k));
            a.set(pivot, k, tmp);
        }
        F4 inv = a.get(lead, c).inverse();
        for (size_t r = 0; r < a.rows(); r++) {
            if (r == lead || a.get(r, c).is_zero()) {
                continue;
            }
            F4 factor = a.get(r, c) * inv;
            for (size_t k = 0; k < a.cols(); k++) {
                a.set(r, k, a.get(r, k) + factor * a.get(lead, k));
            }
        }
        lead++;
    }
    return lead;
}

size_t weight_f4(const std::vector<F4> &v) {
    size_t w = 0;
    for (F4 e : v) {
        w += !e.is_zero();
    }
    return w;
}

bool trace_inner(const std::vector<F4> &a, const std::vector<F4> &b) {
    if (a.size() != b.size()) {
        throw DimensionError("GF(4) vector length mismatch");
    }
    bool acc = false;
    for (size_t i = 0; i < a.size(); i++) {
        acc ^= trace_inner(a[i], b[i]);
    }
    return acc;
}

BitVec gamma(const std::vector<F4> &v) {
    size_t n = v.size();
    BitVec out(2 * n);
    for (size_t i = 0; i < n; i++) {
        auto [z, x] = v[i].gamma();
        out.set(i, z);
        out.set(n + i, x);
    }
    return out;
}

BitMatrix f4_to_symplectic(const F4Matrix &h4) {
    F4Matrix stacked = h4.scaled(F4::w()).vstack(h4.scaled(F4::wbar()));
    BitMatrix out(0, 2 * h4.cols());
    for (size_t r = 0; r < stacked.rows(); r++) {
        out.append_row(gamma(stacked.row(r)));
    }
    return out;
}

F4Matrix read_f4_matrix(std::istream &in) {
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        lines.push_back(line);
    }
    if (lines.empty()) {
        throw ParseError("empty GF(4) matrix file");
    }
    std::istringstream header(lines.front());
    long rows = 0, cols = 0;
    std::string extra;
    if (!(header >> rows >> cols) || (header >> extra) || rows < 1 || cols < 1) {
        throw ParseError("GF(4) matrix header must be 'ROWS COLS' with both positive");
    }
    if (lines.size() - 1 != static_cast<size_t>(rows)) {
        throw ParseError(fmt::format("expected {} rows, found {}", rows, lines.size() - 1));
    }
    F4Matrix m = F4Matrix::from_rows(std::vector<std::string>(lines.begin() + 1, lines.end()));
    if (m.cols() != static_cast<size_t>(cols)) {
        throw ParseError(fmt::format("expected {} columns, found {}", cols, m.cols()));
    }
    return m;
}

void write_f4_matrix(std::ostream &out, const F4Matrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out << (c ? " " : "") << m.get(r, c).symbol();
        }
        out << '\n';
    }
}

}  // namespace eaqec
