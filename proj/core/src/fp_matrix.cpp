#include "acgw/fp_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace acgw {

namespace {

std::uint32_t reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.ref(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols,
                             std::uint32_t p) {
    FpMatrix m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged matrix literal: row " + std::to_string(r) + " has " +
                                        std::to_string(rows[r].size()) + " entries, expected " +
                                        std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m.ref(r, c) = reduce(rows[r][c], p);
    }
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long long v) { ref(r, c) = reduce(v, p_); }

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                                    std::to_string(rhs.cols_));
    FpMatrix out(rows_, rhs.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.ref(i, j) = static_cast<Entry>((out.at(i, j) + a * rhs.at(k, j)) % p_);
        }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.ref(c, r) = at(r, c);
    return t;
}

bool FpMatrix::is_zero() const {
    for (auto v : data_)
        if (v != 0) return false;
    return true;
}

FpMatrix FpMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    FpMatrix out(rows_, idx.size(), p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) out.ref(r, j) = at(r, idx[j]);
    return out;
}

FpMatrix FpMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    FpMatrix out(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out.ref(i, c) = at(idx[i], c);
    return out;
}

FpMatrix::Echelon FpMatrix::rref() const {
    FpMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && m.at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.ref(sel, c), m.ref(row, c));
        const std::uint64_t inv = fp_inverse(m.at(row, col), p_);
        for (std::size_t c = 0; c < cols_; ++c) m.ref(row, c) = static_cast<Entry>(m.at(row, c) * inv % p_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const std::uint64_t f = m.at(r, col);
            for (std::size_t c = 0; c < cols_; ++c)
                m.ref(r, c) = static_cast<Entry>((m.at(r, c) + (p_ - f) * m.at(row, c)) % p_);
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::size_t> keep(row);
    for (std::size_t i = 0; i < row; ++i) keep[i] = i;
    return {m.select_rows(keep), std::move(pivots)};
}

std::size_t FpMatrix::rank() const { return rref().pivots.size(); }

FpMatrix FpMatrix::null_space() const {
    const auto ech = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free.push_back(c);
    FpMatrix basis(cols_, free.size(), p_);
    for (std::size_t j = 0; j < free.size(); ++j) {
        basis.ref(free[j], j) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            const Entry v = ech.reduced.at(r, free[j]);
            basis.ref(ech.pivots[r], j) = (p_ - v) % p_;
        }
    }
    return basis;
}

std::optional<FpMatrix> FpMatrix::solve(const FpMatrix& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve: row count mismatch");
    const auto ech = hconcat(*this, rhs).rref();
    FpMatrix x(cols_, rhs.cols_, p_);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] >= cols_) return std::nullopt;  // pivot in augmented part
        for (std::size_t j = 0; j < rhs.cols_; ++j) x.ref(ech.pivots[r], j) = ech.reduced.at(r, cols_ + j);
    }
    return x;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return solve(identity(rows_, p_));
}

FpMatrix FpMatrix::column_space_key() const { return transpose().rref().reduced; }

FpMatrix FpMatrix::row_space_key() const { return rref().reduced; }

std::vector<std::vector<long long>> FpMatrix::to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
    return out;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ',';
            os << at(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

FpMatrix hconcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
    FpMatrix out(a.rows(), a.cols() + b.cols(), a.prime());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

}  // namespace acgw
