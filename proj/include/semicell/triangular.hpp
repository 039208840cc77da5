#ifndef SEMICELL_TRIANGULAR_HPP
#define SEMICELL_TRIANGULAR_HPP

#include <functional>

#include "semicell/matrix.hpp"

namespace semicell {

/// A family of upper triangular matrices acting on one space; the
/// diagonal of the k-th matrix carries the residues r_k^j.
struct TriangularFamily {
    std::vector<Matrix> mats;

    size_t dimension() const { return mats.empty() ? 0 : mats.front().rows(); }
    size_t size() const { return mats.size(); }
    const Scalar& residue(size_t k, size_t j) const { return mats[k].at(j, j); }
};

/// Validates squareness, matching fields and upper triangularity.
TriangularFamily make_family(std::vector<Matrix> mats);

/// Unit test for scalars of a local ring: every scalar is a unit or lies
/// in the maximal ideal.
struct LocalRingContext {
    std::function<bool(const Scalar&)> is_unit;

    static LocalRingContext field();
    static LocalRingContext dvr(const DvrContext& ctx);
};

/// The idempotent-lifting polynomial: eps_N(X) = eps_N(X, 1-X) where
/// eps_N(X,Y) collects the first half of (X+Y)^{2N-1}. Integer
/// coefficients, returned over Q. eps_1(X) = X.
Poly epsilon_poly(int N);

/// Coefficient grid of the two-variable polynomial: entry [a][b] is the
/// coefficient of X^a Y^b.
std::vector<std::vector<Int>> epsilon_bivariate(int N);

/// e = eps_N(x); verified idempotent (x^2 = x modulo a nilpotent ideal of
/// degree <= N is the caller's obligation), and e - x has zero diagonal
/// when x has 0/1 diagonal.
Matrix lift_idempotent(const Matrix& x, int N);

/// Z_i: the product over j != i of (L_k - r_k^j)/(r_k^i - r_k^j), where
/// k = k(j, i) is the smallest index with a unit difference unless an
/// explicit choice is supplied (choices[j] = k, -1 for automatic).
Matrix separating_product(const TriangularFamily& fam, size_t i, const LocalRingContext& ctx,
                          const std::vector<int>* choices = nullptr);

/// E_i = Z_i^d for every i; each verified to have shape {i}. The result
/// is directed.
std::vector<Matrix> shape_idempotents(const TriangularFamily& fam, const LocalRingContext& ctx);

/// Gram-Schmidt pass for a directed list of idempotents: repeatedly
/// accept the head and replace the tail f by (1-F)f. Directedness is
/// verified, and the output must be a complete orthogonal set.
std::vector<Matrix> orthogonalize_directed(std::vector<Matrix> idems);

struct CompleteIdempotents {
    std::vector<std::vector<size_t>> classes;  // linkage partition of {0..d-1}
    std::vector<Matrix> idempotents;           // one per class, of that shape
};

/// Full pipeline: linkage classes from the residues, Z_J per class,
/// eps_d lift, then the two-sided orthogonalization sweep.
CompleteIdempotents complete_idempotents(const TriangularFamily& fam, const LocalRingContext& ctx);

}  // namespace semicell

#endif
