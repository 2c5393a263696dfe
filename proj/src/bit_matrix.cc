#include "eaqec/bit_matrix.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "eaqec/errors.h"

namespace eaqec {

namespace {

size_t words_for(size_t bits) { return (bits + 63) / 64; }

void require_same_size(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) {
        throw DimensionError(fmt::format("bit vector length mismatch: {} vs {}", a.size(), b.size()));
    }
}

std::string next_content_line(std::istream &in) {
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        return line.substr(first, last - first + 1);
    }
    throw ParseError("unexpected end of input");
}

std::vector<long> parse_ints(const std::string &line) {
    std::istringstream ss(line);
    std::vector<long> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) {
                throw ParseError(fmt::format("bad integer '{}'", tok));
            }
            out.push_back(v);
        } catch (const std::logic_error &) {
            throw ParseError(fmt::format("bad integer '{}'", tok));
        }
    }
    return out;
}

}  // namespace

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError(fmt::format("illegal bit character '{}'", bits[i]));
        }
    }
    return v;
}

void BitVec::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

bool BitVec::dot(const BitVec &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BitVec::first_one() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + std::countr_zero(words_[w]);
        }
    }
    return num_bits_;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec out(num_bits_ + tail.num_bits_);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (size_t i = 0; i < tail.num_bits_; i++) {
        if (tail.get(i)) {
            out.set(num_bits_ + i, true);
        }
    }
    return out;
}

BitVec BitVec::slice(size_t begin, size_t end) const {
    BitVec out(end - begin);
    for (size_t i = begin; i < end; i++) {
        if (get(i)) {
            out.set(i - begin, true);
        }
    }
    return out;
}

BitVec BitVec::block_rotate(size_t block, size_t amount) const {
    BitVec out(num_bits_);
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            size_t base = i - i % block;
            out.set(base + (i % block + amount) % block, true);
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix::BitMatrix(std::vector<BitVec> rows, size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw DimensionError(fmt::format("row of length {} in matrix with {} columns", r.size(), cols_));
        }
    }
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return BitMatrix();
    }
    BitMatrix m(0, rows[0].size());
    for (const auto &r : rows) {
        m.append_row(BitVec::from_string(r));
    }
    return m;
}

void BitMatrix::append_row(BitVec row) {
    if (row.size() != cols_) {
        throw DimensionError(fmt::format("row of length {} in matrix with {} columns", row.size(), cols_));
    }
    rows_.push_back(std::move(row));
}

BitVec BitMatrix::column(size_t c) const {
    BitVec out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (get(r, c)) {
            out.set(r, true);
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::row_range(size_t begin, size_t end) const {
    return BitMatrix(std::vector<BitVec>(rows_.begin() + begin, rows_.begin() + end), cols_);
}

BitMatrix BitMatrix::vstack(const BitMatrix &below) const {
    if (below.cols_ != cols_ && rows() && below.rows()) {
        throw DimensionError("vstack column mismatch");
    }
    std::vector<BitVec> all = rows_;
    all.insert(all.end(), below.rows_.begin(), below.rows_.end());
    return BitMatrix(std::move(all), rows() ? cols_ : below.cols_);
}

BitMatrix BitMatrix::hstack(const BitMatrix &right) const {
    if (right.rows() != rows()) {
        throw DimensionError("hstack row mismatch");
    }
    BitMatrix out(0, cols_ + right.cols_);
    for (size_t r = 0; r < rows(); r++) {
        out.append_row(rows_[r].concat(right.rows_[r]));
    }
    return out;
}

BitVec BitMatrix::multiply(const BitVec &v) const {
    if (v.size() != cols_) {
        throw DimensionError(fmt::format("vector of length {} against {} columns", v.size(), cols_));
    }
    BitVec out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

size_t BitMatrix::nnz() const {
    size_t total = 0;
    for (const auto &r : rows_) {
        total += r.popcount();
    }
    return total;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec &r) { return r.is_zero(); });
}

std::string BitMatrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError(fmt::format("cannot multiply {}x{} by {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            if (a.get(r, k)) {
                out.row(r) ^= b.row(k);
            }
        }
    }
    return out;
}

BitMatrix rref(const BitMatrix &m) {
    std::vector<BitVec> rows = m.row_list();
    size_t lead = 0;
    for (size_t c = 0; c < m.cols() && lead < rows.size(); c++) {
        size_t pivot = lead;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[lead], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != lead && rows[r].get(c)) {
                rows[r] ^= rows[lead];
            }
        }
        lead++;
    }
    rows.resize(lead);
    return BitMatrix(std::move(rows), m.cols());
}

size_t rank(const BitMatrix &m) { return RowSpace(m).dim(); }

bool in_rowspace(const BitMatrix &m, const BitVec &v) {
    if (v.size() != m.cols()) {
        throw DimensionError(fmt::format("vector of length {} against {} columns", v.size(), m.cols()));
    }
    return RowSpace(m).contains(v);
}

BitMatrix nullspace(const BitMatrix &m) {
    BitMatrix reduced = rref(m);
    size_t n = m.cols();
    std::vector<size_t> pivot_cols;
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < reduced.rows(); r++) {
        size_t c = reduced.row(r).first_one();
        pivot_cols.push_back(c);
        is_pivot[c] = true;
    }
    BitMatrix basis(0, n);
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(n);
        v.set(free, true);
        for (size_t r = 0; r < reduced.rows(); r++) {
            if (reduced.get(r, free)) {
                v.set(pivot_cols[r], true);
            }
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

RowSpace::RowSpace(const BitMatrix &m) : cols_(m.cols()) {
    for (const auto &r : m.row_list()) {
        insert(r);
    }
}

BitVec RowSpace::reduce(BitVec v) const {
    if (v.size() != cols_) {
        throw DimensionError(fmt::format("vector of length {} against {} columns", v.size(), cols_));
    }
    for (size_t i = 0; i < basis_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= basis_[i];
        }
    }
    return v;
}

bool RowSpace::insert(const BitVec &v) {
    BitVec residue = reduce(v);
    size_t pivot = residue.first_one();
    if (pivot == residue.size()) {
        return false;
    }
    for (auto &b : basis_) {
        if (b.get(pivot)) {
            b ^= residue;
        }
    }
    basis_.push_back(std::move(residue));
    pivots_.push_back(pivot);
    return true;
}

BitMatrix RowSpace::basis() const { return BitMatrix(basis_, cols_); }

BitMatrix read_dense(std::istream &in) {
    auto header = parse_ints(next_content_line(in));
    if (header.size() != 2 || header[0] < 1 || header[1] < 1) {
        throw ParseError("dense matrix header must be 'ROWS COLS' with both positive");
    }
    size_t rows = header[0];
    size_t cols = header[1];
    BitMatrix m(0, cols);
    for (size_t r = 0; r < rows; r++) {
        std::string line = next_content_line(in);
        line.erase(std::remove_if(line.begin(), line.end(), [](char ch) { return ch == ' ' || ch == '\t'; }),
                   line.end());
        if (line.size() != cols) {
            throw ParseError(fmt::format("row {} has {} entries, expected {}", r + 1, line.size(), cols));
        }
        m.append_row(BitVec::from_string(line));
    }
    return m;
}

void write_dense(std::ostream &out, const BitMatrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n' << m.str();
}

BitMatrix read_alist(std::istream &in) {
    auto dims = parse_ints(next_content_line(in));
    if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1) {
        throw ParseError("alist header must be 'N M'");
    }
    size_t n = dims[0];
    size_t m = dims[1];
    auto weights = parse_ints(next_content_line(in));
    if (weights.size() != 2) {
        throw ParseError("alist second line must hold the maximum column and row weights");
    }
    // Per-column and per-row weight lists are redundant with the index lists below.
    parse_ints(next_content_line(in));
    parse_ints(next_content_line(in));
    BitMatrix h(m, n);
    for (size_t col = 0; col < n; col++) {
        for (long idx : parse_ints(next_content_line(in))) {
            if (idx == 0) {
                continue;
            }
            if (idx < 0 || static_cast<size_t>(idx) > m) {
                throw ParseError(fmt::format("row index {} out of range in column {}", idx, col + 1));
            }
            h.set(idx - 1, col, true);
        }
    }
    for (size_t row = 0; row < m; row++) {
        for (long idx : parse_ints(next_content_line(in))) {
            if (idx == 0) {
                continue;
            }
            if (idx < 0 || static_cast<size_t>(idx) > n || !h.get(row, idx - 1)) {
                throw ParseError(fmt::format("row list {} disagrees with the column lists", row + 1));
            }
        }
    }
    return h;
}

void write_alist(std::ostream &out, const BitMatrix &h) {
    size_t m = h.rows();
    size_t n = h.cols();
    BitMatrix t = h.transpose();
    std::vector<size_t> col_w(n), row_w(m);
    for (size_t c = 0; c < n; c++) {
        col_w[c] = t.row(c).popcount();
    }
    for (size_t r = 0; r < m; r++) {
        row_w[r] = h.row(r).popcount();
    }
    size_t max_col = n ? *std::max_element(col_w.begin(), col_w.end()) : 0;
    size_t max_row = m ? *std::max_element(row_w.begin(), row_w.end()) : 0;
    out << n << ' ' << m << '\n' << max_col << ' ' << max_row << '\n';
    for (size_t c = 0; c < n; c++) {
        out << (c ? " " : "") << col_w[c];
    }
    out << '\n';
    for (size_t r = 0; r < m; r++) {
        out << (r ? " " : "") << row_w[r];
    }
    out << '\n';
    auto emit = [&](const BitVec &v, size_t pad) {
        size_t written = 0;
        for (size_t i = 0; i < v.size(); i++) {
            if (v.get(i)) {
                out << (written++ ? " " : "") << i + 1;
            }
        }
        for (; written < pad; written++) {
            out << (written ? " " : "") << 0;
        }
        out << '\n';
    };
    for (size_t c = 0; c < n; c++) {
        emit(t.row(c), max_col);
    }
    for (size_t r = 0; r < m; r++) {
        emit(h.row(r), max_row);
    }
}

BitMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(fmt::format("cannot open '{}'", path));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::istringstream probe(text);
    next_content_line(probe);
    std::string second = next_content_line(probe);
    bool alist = second.find_first_of(" \t") != std::string::npos &&
                 parse_ints(second).size() == 2;
    std::istringstream body(text);
    return alist ? read_alist(body) : read_dense(body);
}

}  // namespace eaqec
