#include "semicell/triangular.hpp"

namespace semicell {

TriangularFamily make_family(std::vector<Matrix> mats) {
    if (mats.empty()) throw error("triangular family needs at least one matrix");
    const FieldPtr& f = mats.front().field();
    size_t d = mats.front().rows();
    for (const Matrix& m : mats) {
        if (!m.square() || m.rows() != d) throw error("family matrices must be square of one size");
        if (!m.field()->same(*f)) throw error("family matrices must share one field");
        if (!m.is_upper_triangular()) throw error("family matrices must be upper triangular");
    }
    return TriangularFamily{std::move(mats)};
}

LocalRingContext LocalRingContext::field() {
    return LocalRingContext{[](const Scalar& s) { return !s.is_zero(); }};
}

LocalRingContext LocalRingContext::dvr(const DvrContext& ctx) {
    return LocalRingContext{[ctx](const Scalar& s) {
        Valuation v = dvr_valuation(s, ctx);
        return !v.infinite && v.v == 0;
    }};
}

Poly epsilon_poly(int N) {
    if (N < 1) throw error("epsilon_poly needs N >= 1");
    auto Q = Field::rationals();
    Poly x(Q, {Scalar::rational(Rat(0)), Scalar::rational(Rat(1))});
    Poly one_minus_x(Q, {Scalar::rational(Rat(1)), Scalar::rational(Rat(-1))});
    Poly acc(Q);
    for (int i = 0; i <= N - 1; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * N - 1),
                     static_cast<unsigned long>(i));
        Poly term = x.pow(static_cast<unsigned long>(2 * N - 1 - i)) *
                    one_minus_x.pow(static_cast<unsigned long>(i)) *
                    Scalar::rational(Rat(binom));
        acc = acc + term;
    }
    return acc;
}

std::vector<std::vector<Int>> epsilon_bivariate(int N) {
    if (N < 1) throw error("epsilon_bivariate needs N >= 1");
    size_t deg = static_cast<size_t>(2 * N - 1);
    std::vector<std::vector<Int>> grid(deg + 1, std::vector<Int>(deg + 1, Int(0)));
    for (int i = 0; i <= N - 1; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * N - 1),
                     static_cast<unsigned long>(i));
        grid[static_cast<size_t>(2 * N - 1 - i)][static_cast<size_t>(i)] = binom;
    }
    return grid;
}

Matrix lift_idempotent(const Matrix& x, int N) {
    Matrix e = poly_at_matrix(epsilon_poly(N), x);
    if (!(e * e == e)) throw error("precondition violated: eps_N(x) is not idempotent");
    bool indicator = true;
    for (size_t i = 0; i < x.rows() && indicator; ++i)
        indicator = x.at(i, i).is_zero() || x.at(i, i).is_one();
    if (indicator)
        for (size_t i = 0; i < x.rows(); ++i)
            if (!(e.at(i, i) == x.at(i, i))) throw error("lift moved the diagonal");
    return e;
}

Matrix separating_product(const TriangularFamily& fam, size_t i, const LocalRingContext& ctx,
                          const std::vector<int>* choices) {
    size_t d = fam.dimension();
    const FieldPtr& f = fam.mats.front().field();
    Matrix z = Matrix::identity(f, d);
    for (size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        int k = -1;
        if (choices && (*choices)[j] >= 0) {
            k = (*choices)[j];
            if (!ctx.is_unit(fam.residue(static_cast<size_t>(k), i) - fam.residue(static_cast<size_t>(k), j)))
                throw error("chosen residue difference is not a unit at pair (" +
                            std::to_string(i) + ", " + std::to_string(j) + ")");
        } else {
            for (size_t kk = 0; kk < fam.size(); ++kk)
                if (ctx.is_unit(fam.residue(kk, i) - fam.residue(kk, j))) {
                    k = static_cast<int>(kk);
                    break;
                }
            if (k < 0)
                throw error("unseparated pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        Scalar denom = fam.residue(static_cast<size_t>(k), i) - fam.residue(static_cast<size_t>(k), j);
        Matrix factor = fam.mats[static_cast<size_t>(k)];
        for (size_t r = 0; r < d; ++r) factor.at(r, r) -= fam.residue(static_cast<size_t>(k), j);
        z = z * (factor * denom.inverse());
    }
    return z;
}

std::vector<Matrix> shape_idempotents(const TriangularFamily& fam, const LocalRingContext& ctx) {
    size_t d = fam.dimension();
    std::vector<Matrix> out;
    for (size_t i = 0; i < d; ++i) {
        Matrix e = separating_product(fam, i, ctx).pow(static_cast<unsigned long>(d));
        if (!e.has_shape({i}))
            throw error("Z_" + std::to_string(i) + "^d does not have shape {" + std::to_string(i) + "}");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Matrix> orthogonalize_directed(std::vector<Matrix> idems) {
    if (idems.empty()) return idems;
    const size_t m = idems.size();
    const FieldPtr& f = idems.front().field();
    const size_t d = idems.front().rows();

    for (size_t a = 0; a < m; ++a) {
        if (!(idems[a] * idems[a] == idems[a]))
            throw error("input " + std::to_string(a) + " is not idempotent");
        for (size_t b = a + 1; b < m; ++b)
            if (!(idems[b] * idems[a]).is_zero())
                throw error("directedness violated at pair (" + std::to_string(b) + ", " +
                            std::to_string(a) + ")");
    }

    Matrix one = Matrix::identity(f, d);
    Matrix accepted_sum(f, d, d);
    for (size_t k = 0; k < m; ++k) {
        accepted_sum = accepted_sum + idems[k];
        Matrix complement = one - accepted_sum;
        for (size_t j = k + 1; j < m; ++j) idems[j] = complement * idems[j];
    }

    for (size_t a = 0; a < m; ++a) {
        if (!(idems[a] * idems[a] == idems[a])) throw error("output is not idempotent");
        for (size_t b = 0; b < m; ++b)
            if (a != b && !(idems[a] * idems[b]).is_zero())
                throw error("output is not orthogonal");
    }
    if (!(accepted_sum == one)) throw error("directed system is not complete");
    return idems;
}

CompleteIdempotents complete_idempotents(const TriangularFamily& fam_in,
                                         const LocalRingContext& ctx) {
    TriangularFamily fam = fam_in;
    const size_t d = fam.dimension();
    const FieldPtr& f = fam.mats.front().field();
    Matrix one = Matrix::identity(f, d);

    // if every residue of some L_k vanishes, replace L_k by 1 + L_k; the
    // differences, and hence the linkage classes and the Z products, are
    // unchanged
    for (Matrix& L : fam.mats) {
        bool all_zero = true;
        for (size_t j = 0; j < d && all_zero; ++j) all_zero = L.at(j, j).is_zero();
        if (all_zero) L = L + one;
    }

    auto linked = [&](size_t a, size_t b) {
        for (size_t k = 0; k < fam.size(); ++k)
            if (ctx.is_unit(fam.residue(k, a) - fam.residue(k, b))) return false;
        return true;
    };

    CompleteIdempotents result;
    std::vector<int> class_of(d, -1);
    for (size_t j = 0; j < d; ++j) {
        if (class_of[j] >= 0) continue;
        std::vector<size_t> cls{j};
        class_of[j] = static_cast<int>(result.classes.size());
        for (size_t i = j + 1; i < d; ++i)
            if (class_of[i] < 0 && linked(j, i)) {
                cls.push_back(i);
                class_of[i] = class_of[j];
            }
        result.classes.push_back(std::move(cls));
    }
    // linkage must be an equivalence on the given residues
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
            if ((class_of[a] == class_of[b]) != linked(a, b))
                throw error("linkage relation is not an equivalence on these residues");

    // Z_J per class, with i = min(J) as the reference row
    std::vector<Matrix> work;
    for (const auto& cls : result.classes) {
        size_t ref = cls.front();
        std::vector<bool> in_cls(d, false);
        for (size_t j : cls) in_cls[j] = true;
        Matrix z = one;
        for (size_t j = 0; j < d; ++j) {
            if (in_cls[j]) continue;
            int k = -1;
            for (size_t kk = 0; kk < fam.size(); ++kk)
                if (ctx.is_unit(fam.residue(kk, ref) - fam.residue(kk, j))) {
                    k = static_cast<int>(kk);
                    break;
                }
            if (k < 0)
                throw error("no unit denominator for (j, k, i) = (" + std::to_string(j) +
                            ", *, " + std::to_string(ref) + ")");
            Scalar denom = fam.residue(static_cast<size_t>(k), ref) - fam.residue(static_cast<size_t>(k), j);
            Matrix factor = fam.mats[static_cast<size_t>(k)];
            for (size_t r = 0; r < d; ++r) factor.at(r, r) -= fam.residue(static_cast<size_t>(k), j);
            z = z * (factor * denom.inverse());
        }
        work.push_back(lift_idempotent(z.pow(static_cast<unsigned long>(d)), static_cast<int>(d)));
    }

    // two-sided sweep: left (1-F) then right (1-F), re-lifting after each
    Matrix accepted_sum(f, d, d);
    for (size_t k = 0; k < work.size(); ++k) {
        accepted_sum = accepted_sum + work[k];
        Matrix complement = one - accepted_sum;
        for (size_t j = k + 1; j < work.size(); ++j) {
            Matrix tilde = lift_idempotent(complement * work[j], static_cast<int>(d));
            work[j] = lift_idempotent(tilde * complement, static_cast<int>(d));
        }
    }

    for (size_t a = 0; a < work.size(); ++a) {
        if (!(work[a] * work[a] == work[a])) throw error("output is not idempotent");
        if (!work[a].has_shape(result.classes[a]))
            throw error("output " + std::to_string(a) + " lost its shape");
        for (size_t b = 0; b < work.size(); ++b)
            if (a != b && !(work[a] * work[b]).is_zero()) throw error("output is not orthogonal");
    }
    if (!(accepted_sum == one)) throw error("idempotents do not sum to the identity");

    result.idempotents = std::move(work);
    return result;
}

}  // namespace semicell
