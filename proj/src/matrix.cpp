#include "semicell/matrix.hpp"

#include <cassert>
#include <sstream>

namespace semicell {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      e_(rows * cols, Scalar::zero(field_)) {}

Matrix Matrix::identity(const FieldPtr& field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch in +");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch in -");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw error("matrix shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(unsigned long e) const {
    if (!square()) throw error("pow of non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_upper_triangular() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < std::min(i, cols_); ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

namespace {

// Forward elimination, first nonzero pivot, canonical entries throughout.
// Operates on `a` in place; `rhs` (if given) receives the same row ops.
struct Echelon {
    size_t rank = 0;
    bool negate = false;                // odd number of row swaps
    std::vector<size_t> pivot_cols;
    std::vector<Scalar> pivots;
};

Echelon eliminate(Matrix& a, Matrix* rhs) {
    Echelon res;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t p = row;
        while (p < a.rows() && a.at(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row) {
            for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
            if (rhs)
                for (size_t j = 0; j < rhs->cols(); ++j) std::swap(rhs->at(p, j), rhs->at(row, j));
            res.negate = !res.negate;
        }
        const Scalar pivot = a.at(row, col);
        for (size_t i = row + 1; i < a.rows(); ++i) {
            if (a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col) / pivot;
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
            if (rhs)
                for (size_t j = 0; j < rhs->cols(); ++j) rhs->at(i, j) -= f * rhs->at(row, j);
        }
        res.pivot_cols.push_back(col);
        res.pivots.push_back(pivot);
        ++row;
    }
    res.rank = row;
    return res;
}

// Back substitution to reduced echelon form (pivots scaled to 1).
void back_substitute(Matrix& a, Matrix* rhs, const Echelon& ech) {
    for (size_t r = ech.rank; r-- > 0;) {
        size_t col = ech.pivot_cols[r];
        Scalar inv = a.at(r, col).inverse();
        for (size_t j = col; j < a.cols(); ++j) a.at(r, j) *= inv;
        if (rhs)
            for (size_t j = 0; j < rhs->cols(); ++j) rhs->at(r, j) *= inv;
        for (size_t i = 0; i < r; ++i) {
            Scalar f = a.at(i, col);
            if (f.is_zero()) continue;
            for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
            if (rhs)
                for (size_t j = 0; j < rhs->cols(); ++j) rhs->at(i, j) -= f * rhs->at(r, j);
        }
    }
}

}  // namespace

Scalar Matrix::determinant() const {
    if (!square()) throw error("determinant of non-square matrix");
    if (rows_ == 0) return Scalar::one(field_);
    Matrix a = *this;
    Echelon ech = eliminate(a, nullptr);
    if (ech.rank < rows_) return Scalar::zero(field_);
    Scalar det = Scalar::one(field_);
    for (const Scalar& p : ech.pivots) det *= p;
    return ech.negate ? -det : det;
}

size_t Matrix::rank() const {
    Matrix a = *this;
    return eliminate(a, nullptr).rank;
}

Matrix Matrix::inverse() const {
    if (!square()) throw error("inverse of non-square matrix");
    Matrix a = *this;
    Matrix inv = identity(field_, rows_);
    Echelon ech = eliminate(a, &inv);
    if (ech.rank < rows_) throw error("singular matrix");
    back_substitute(a, &inv, ech);
    return inv;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& rhs) const {
    if (rhs.size() != rows_) throw error("solve: rhs size mismatch");
    Matrix a = *this;
    Matrix b(field_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i) b.at(i, 0) = rhs[i];
    Echelon ech = eliminate(a, &b);
    for (size_t i = ech.rank; i < rows_; ++i)
        if (!b.at(i, 0).is_zero()) return std::nullopt;
    back_substitute(a, &b, ech);
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (size_t r = 0; r < ech.rank; ++r) x[ech.pivot_cols[r]] = b.at(r, 0);
    return x;
}

Poly Matrix::minimal_polynomial() const {
    if (!square()) throw error("minimal polynomial of non-square matrix");
    const size_t n = rows_;
    Poly m = Poly::constant(Scalar::one(field_));
    if (n == 0) return m;

    // global echelon over all Krylov vectors seen so far, to skip start
    // vectors already inside an invariant subspace
    std::vector<std::vector<Scalar>> global;  // echelon rows
    std::vector<size_t> global_piv;

    auto reduce_against = [&](std::vector<Scalar> v, const std::vector<std::vector<Scalar>>& rows,
                              const std::vector<size_t>& pivs,
                              std::vector<Scalar>* combo_out,
                              const std::vector<std::vector<Scalar>>* combos) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Scalar& lead = v[pivs[r]];
            if (lead.is_zero()) continue;
            Scalar f = lead / rows[r][pivs[r]];
            for (size_t j = 0; j < n; ++j) v[j] -= f * rows[r][j];
            if (combo_out)
                for (size_t j = 0; j < combo_out->size(); ++j)
                    (*combo_out)[j] -= f * (*combos)[r][j];
        }
        return v;
    };

    auto first_nonzero = [&](const std::vector<Scalar>& v) -> long {
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return static_cast<long>(j);
        return -1;
    };

    for (size_t start = 0; start < n && static_cast<size_t>(m.degree()) < n; ++start) {
        std::vector<Scalar> v(n, Scalar::zero(field_));
        v[start] = Scalar::one(field_);
        // already spanned: its local minimal polynomial divides m
        if (first_nonzero(reduce_against(v, global, global_piv, nullptr, nullptr)) < 0) continue;

        // local Krylov chain with combination tracking
        std::vector<std::vector<Scalar>> ech;     // echelonized chain vectors
        std::vector<std::vector<Scalar>> combos;  // same, as combos of A^i v
        std::vector<size_t> pivs;
        std::vector<Scalar> w = v;
        size_t steps = 0;
        for (;;) {
            std::vector<Scalar> combo(n + 1, Scalar::zero(field_));
            combo[steps] = Scalar::one(field_);
            std::vector<Scalar> red = reduce_against(w, ech, pivs, &combo, &combos);
            long piv = first_nonzero(red);
            if (piv < 0) {
                // dependence: X^steps - sum earlier terms
                Scalar lead = combo[steps];
                std::vector<Scalar> cs(steps + 1, Scalar::zero(field_));
                for (size_t j = 0; j <= steps; ++j) cs[j] = combo[j] / lead;
                m = Poly::lcm(m, Poly(field_, cs));
                break;
            }
            ech.push_back(red);
            combos.push_back(combo);
            pivs.push_back(static_cast<size_t>(piv));
            // feed the global echelon as well
            std::vector<Scalar> gred = reduce_against(red, global, global_piv, nullptr, nullptr);
            long gpiv = first_nonzero(gred);
            if (gpiv >= 0) {
                global.push_back(gred);
                global_piv.push_back(static_cast<size_t>(gpiv));
            }
            // w = A * w
            std::vector<Scalar> next(n, Scalar::zero(field_));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (!at(i, j).is_zero() && !w[j].is_zero()) next[i] += at(i, j) * w[j];
            w = std::move(next);
            ++steps;
        }
    }
    return m.monic();
}

Poly Matrix::characteristic_polynomial() const {
    if (!square()) throw error("characteristic polynomial of non-square matrix");
    const size_t n = rows_;
    Poly one = Poly::constant(Scalar::one(field_));
    if (n == 0) return one;
    // X*I - A with entries in F[X], fraction-free Bareiss elimination
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(field_)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                a[i][j] = Poly(field_, {-at(i, j), Scalar::one(field_)});
            else
                a[i][j] = Poly::constant(-at(i, j));
        }
    Poly prev = one;
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return Poly(field_);  // cannot happen for X*I - A
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = Poly(field_);
        }
        prev = a[k][k];
    }
    Poly chi = a[n - 1][n - 1];
    return negate ? -chi : chi;
}

bool Matrix::has_shape(const std::vector<size_t>& J) const {
    if (!square()) throw error("shape predicate needs a square matrix");
    const size_t d = rows_;
    if (J.empty()) return false;
    std::vector<bool> in_j(d, false);
    for (size_t i : J) {
        if (i >= d) throw error("shape index out of range");
        in_j[i] = true;
    }
    for (size_t i = 0; i < d; ++i) {
        bool want_one = in_j[i];
        if (want_one && !at(i, i).is_one()) return false;
        if (!want_one && !at(i, i).is_zero()) return false;
    }
    for (size_t k = 0; k < d; ++k)
        for (size_t l = 0; l < d; ++l) {
            if (k == l || at(k, l).is_zero()) continue;
            if (k > l) return false;
            bool hooked = false;
            for (size_t i = k; i <= l && !hooked; ++i) hooked = in_j[i];
            if (!hooked) return false;
        }
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        out << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << "]";
        out << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

Matrix poly_at_matrix(const Poly& p, const Matrix& A) {
    if (!A.square()) throw error("polynomial of non-square matrix");
    const FieldPtr& f = A.field();
    Matrix r(f, A.rows(), A.rows());
    for (int i = p.degree(); i >= 0; --i) {
        r = r * A;
        Scalar c = embed_scalar(p.coeff(i), f);
        for (size_t k = 0; k < A.rows(); ++k) r.at(k, k) += c;
    }
    return r;
}

}  // namespace semicell
