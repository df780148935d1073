#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acgw {

/// Dense matrix over the prime field F_p. Entries are kept reduced in [0, p).
class FpMatrix {
public:
    using Entry = std::uint32_t;

    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);
    static FpMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols,
                              std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    Entry at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v);

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix transpose() const;
    bool is_zero() const;

    /// Columns listed in `idx`, in order.
    FpMatrix select_columns(const std::vector<std::size_t>& idx) const;
    FpMatrix select_rows(const std::vector<std::size_t>& idx) const;

    struct Echelon;
    Echelon rref() const;
    std::size_t rank() const;

    /// Basis of {x : A x = 0} as columns, one per free variable (standard RREF basis).
    FpMatrix null_space() const;

    /// Some X with (*this) X = rhs, or nullopt if the system is inconsistent.
    std::optional<FpMatrix> solve(const FpMatrix& rhs) const;
    std::optional<FpMatrix> inverse() const;

    /// Canonical basis (RREF rows) of the column space; equal column spaces give equal results.
    FpMatrix column_space_key() const;
    /// Canonical basis (RREF rows) of the row space.
    FpMatrix row_space_key() const;

    std::vector<std::vector<long long>> to_rows() const;
    std::string to_string() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<Entry> data_;

    Entry& ref(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
};

struct FpMatrix::Echelon {
    FpMatrix reduced;                 // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t p);

/// Horizontal concatenation [a | b]; row counts must agree.
FpMatrix hconcat(const FpMatrix& a, const FpMatrix& b);

}  // namespace acgw
