#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <variant>
#include <vector>

#include "repkit/field.hpp"
#include "repkit/unipoly.hpp"

namespace repkit {

/// Dense row-major matrix over an exact field. Finite-field entries are kept
/// as raw codes and rationals as mpq values; Scalar is only the boundary type.
/// Zero-row and zero-column matrices are valid everywhere.
class Mat {
   public:
    Mat() : Mat(Field::rational(), 0, 0) {}
    Mat(const Field& f, std::size_t rows, std::size_t cols);
    static Mat identity(const Field& f, std::size_t n);
    static Mat from_ints(const Field& f, std::size_t rows, std::size_t cols, std::initializer_list<long long> entries);
    static Mat from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);
    static Mat from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);
    /// Column vector.
    static Mat column(const std::vector<Scalar>& entries, const Field& f);

    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    bool is_zero() const;
    bool entry_is_zero(std::size_t r, std::size_t c) const;

    Mat transpose() const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& b);
    Mat col(std::size_t c) const { return block(0, c, rows_, 1); }
    Mat select_cols(const std::vector<std::size_t>& idx) const;
    /// Flattens row-major into a column vector.
    Mat vectorize() const;
    /// Inverse of vectorize.
    Mat reshape(std::size_t rows, std::size_t cols) const;
    Scalar trace() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Scalar& c);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const Scalar& c) { return a *= c; }
    friend Mat operator*(const Scalar& c, Mat a) { return a *= c; }
    friend Mat operator*(const Mat& a, const Mat& b);
    Mat operator-() const;
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::vector<std::vector<Scalar>> to_rows() const;

    using Storage = std::variant<std::vector<std::uint64_t>, std::vector<mpq_class>>;
    const Storage& storage() const noexcept { return data_; }
    Storage& storage() noexcept { return data_; }

   private:
    const Field* field_;
    std::size_t rows_, cols_;
    Storage data_;
};

struct Rref {
    Mat reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivots are the first nonzero entries scanning
/// columns left to right.
Rref rref(const Mat& a);
std::size_t rank(const Mat& a);
/// Columns form a basis of {v : a v = 0}.
Mat kernel_basis(const Mat& a);
/// Columns form a basis of the column space, chosen among the pivot columns.
Mat column_basis(const Mat& a);

struct Solution {
    bool consistent = false;
    Mat particular;  // cols(a) x cols(b)
    Mat kernel;      // basis of the right null space of a
};

/// Solves a x = b (b may have several columns).
Solution solve(const Mat& a, const Mat& b);
Mat inverse(const Mat& a);
bool is_invertible(const Mat& a);
Mat kronecker_product(const Mat& a, const Mat& b);
Mat block_diag(const std::vector<Mat>& blocks, const Field& f);
Mat vstack(const std::vector<Mat>& parts, const Field& f, std::size_t cols);
Mat hstack(const std::vector<Mat>& parts, const Field& f, std::size_t rows);
Mat matrix_power(const Mat& a, std::size_t e);

/// True when every column of `sub` lies in the column space of `space`.
bool column_space_contains(const Mat& space, const Mat& sub);

UniPoly minimal_polynomial(const Mat& a);
Mat evaluate(const UniPoly& p, const Mat& a);

void check_shape(bool ok, const char* what);

}  // namespace repkit
