#ifndef SEMICELL_MATRIX_HPP
#define SEMICELL_MATRIX_HPP

#include <optional>
#include <vector>

#include "semicell/field.hpp"

namespace semicell {

/// Dense matrix over one exact field. All algorithms are exact: Gaussian
/// elimination picks the first nonzero pivot and every entry is kept in
/// canonical form, so results are deterministic.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, size_t rows, size_t cols);  // zero matrix
    static Matrix identity(const FieldPtr& field, size_t n);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Matrix operator+(const Matrix&) const;
    Matrix operator-(const Matrix&) const;
    Matrix operator*(const Matrix&) const;
    Matrix operator*(const Scalar&) const;
    bool operator==(const Matrix&) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix pow(unsigned long e) const;
    bool is_zero() const;
    bool is_upper_triangular() const;

    Scalar determinant() const;
    size_t rank() const;
    size_t kernel_dimension() const { return cols_ - rank(); }
    Matrix inverse() const;  // throws "singular"
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& rhs) const;

    /// Least-degree monic annihilating polynomial, by Krylov iteration
    /// with exact elimination.
    Poly minimal_polynomial() const;

    /// det(X*I - A), computed fraction-free over the polynomial ring.
    Poly characteristic_polynomial() const;

    /// Shape predicate: support inside the union of hooks {(k,l): k<=i<=l}
    /// for i in J, and diagonal equal to the 0/1 indicator of J.
    /// J holds 0-based indices.
    bool has_shape(const std::vector<size_t>& J) const;

    std::string to_string() const;

private:
    // row echelon engine; returns rank, optionally tracks determinant sign
    // and applies the same operations to a carried right-hand block.
    friend struct EchelonResult;

    FieldPtr field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// Evaluate p at the matrix A. Coefficients of p are embedded via the
/// obvious map when p lives over the rationals and A over another field
/// of characteristic 0 or p (integer coefficients only in that case).
Matrix poly_at_matrix(const Poly& p, const Matrix& A);

}  // namespace semicell

#endif
