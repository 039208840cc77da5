#include "semicell/seminormal.hpp"

namespace semicell {

SeparationResult check_separation(const ContentTable& ct) {
    const CellDatum& d = *ct.datum();
    int total = d.num_tableaux();
    for (int g1 = 0; g1 < total; ++g1)
        for (int g2 = 0; g2 < total; ++g2) {
            if (g1 == g2 || !d.global_dominates(g1, g2)) continue;
            if (ct.content_vector(g1) == ct.content_vector(g2))
                return SeparationResult{false, g1, g2};
        }
    return SeparationResult{true, -1, -1};
}

std::vector<std::vector<Scalar>> content_value_sets(const ContentTable& ct) {
    const CellDatum& d = *ct.datum();
    std::vector<std::vector<Scalar>> sets(static_cast<size_t>(ct.num_jm()));
    for (int i = 0; i < ct.num_jm(); ++i) {
        auto& set = sets[static_cast<size_t>(i)];
        for (int g = 0; g < d.num_tableaux(); ++g) {
            const Scalar& c = ct.content(g, i);
            bool seen = false;
            for (const Scalar& s : set)
                if (s == c) {
                    seen = true;
                    break;
                }
            if (!seen) set.push_back(c);
        }
    }
    return sets;
}

namespace {

// shared driver for the F_t product: feeds the factors (L_i - c, 1/(c_t(i) - c))
// in the canonical order to `apply`
template <typename Apply>
void ft_factors(const ContentTable& ct, int global_t, Apply&& apply) {
    auto sets = content_value_sets(ct);
    for (int i = 0; i < ct.num_jm(); ++i) {
        const Scalar& ci = ct.content(global_t, i);
        for (const Scalar& c : sets[static_cast<size_t>(i)]) {
            if (c == ci) continue;
            Scalar denom = ci - c;
            if (denom.is_zero()) throw error("separation violated: zero denominator in F_t");
            apply(i, c, denom.inverse());
        }
    }
}

}  // namespace

Matrix ft_module_action(const ContentTable& ct, int lam, int t) {
    const CellDatum& d = *ct.datum();
    int k = d.tableau_count(lam);
    int global_t = d.tableau_global(lam, t);
    Matrix result = Matrix::identity(d.field(), static_cast<size_t>(k));
    std::vector<Matrix> action(static_cast<size_t>(ct.num_jm()));
    std::vector<bool> have(static_cast<size_t>(ct.num_jm()), false);
    ft_factors(ct, global_t, [&](int i, const Scalar& c, const Scalar& inv) {
        if (!have[static_cast<size_t>(i)]) {
            action[static_cast<size_t>(i)] = module_action(d, lam, ct.jm(i));
            have[static_cast<size_t>(i)] = true;
        }
        Matrix factor = action[static_cast<size_t>(i)];
        for (int r = 0; r < k; ++r)
            factor.at(static_cast<size_t>(r), static_cast<size_t>(r)) -= c;
        result = result * (factor * inv);
    });
    return result;
}

AlgebraElement ft_algebra_element(const ContentTable& ct, int global_t, bool override_gates) {
    const CellDatum& d = *ct.datum();
    check_regular_gate(d, override_gates);
    AlgebraElement result = d.one();
    ft_factors(ct, global_t, [&](int i, const Scalar& c, const Scalar& inv) {
        result = (result * ct.jm(i) - result * c) * inv;
    });
    return result;
}

SeminormalData seminormal_data(const ContentTable& ct, int lam) {
    const CellDatum& d = *ct.datum();
    SeparationResult sep = check_separation(ct);
    if (!sep.separated)
        throw error("separation violated: tableaux " + std::to_string(sep.witness_dominant) +
                    " and " + std::to_string(sep.witness_dominated) + " share all contents");

    int k = d.tableau_count(lam);
    Matrix gram = gram_matrix(d, lam);
    SeminormalData data;
    data.lam = lam;
    data.transition = Matrix(d.field(), static_cast<size_t>(k), static_cast<size_t>(k));
    data.gammas.assign(static_cast<size_t>(k), Scalar::zero(d.field()));
    data.ft_actions.reserve(static_cast<size_t>(k));

    std::vector<std::vector<Scalar>> f_rows;
    for (int t = 0; t < k; ++t) {
        Matrix ft = ft_module_action(ct, lam, t);
        // f_t = a_t * F_t: row t of the action matrix
        std::vector<Scalar> f(static_cast<size_t>(k), Scalar::zero(d.field()));
        for (int v = 0; v < k; ++v) f[static_cast<size_t>(v)] = ft.at(static_cast<size_t>(t), static_cast<size_t>(v));
        for (int v = 0; v < k; ++v)
            data.transition.at(static_cast<size_t>(v), static_cast<size_t>(t)) = f[static_cast<size_t>(v)];
        f_rows.push_back(std::move(f));
        data.ft_actions.push_back(std::move(ft));
    }

    // transition must be upper unitriangular in the fixed tableau order
    for (int t = 0; t < k; ++t) {
        if (!data.transition.at(static_cast<size_t>(t), static_cast<size_t>(t)).is_one())
            throw error("transition matrix is not unitriangular");
        for (int v = t + 1; v < k; ++v)
            if (!data.transition.at(static_cast<size_t>(v), static_cast<size_t>(t)).is_zero())
                throw error("transition matrix is not upper triangular");
    }

    auto pair_form = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        Scalar acc = Scalar::zero(d.field());
        for (int a = 0; a < k; ++a) {
            if (x[static_cast<size_t>(a)].is_zero()) continue;
            for (int b = 0; b < k; ++b) {
                const Scalar& g = gram.at(static_cast<size_t>(a), static_cast<size_t>(b));
                if (g.is_zero() || y[static_cast<size_t>(b)].is_zero()) continue;
                acc += x[static_cast<size_t>(a)] * g * y[static_cast<size_t>(b)];
            }
        }
        return acc;
    };

    for (int t = 0; t < k; ++t) {
        data.gammas[static_cast<size_t>(t)] = pair_form(f_rows[static_cast<size_t>(t)], f_rows[static_cast<size_t>(t)]);
        if (data.gammas[static_cast<size_t>(t)].is_zero())
            throw error("gamma vanishes at " + d.tableau_name(lam, t));
        // <a_t, f_t> = gamma_t
        Scalar at_ft = Scalar::zero(d.field());
        for (int b = 0; b < k; ++b)
            at_ft += gram.at(static_cast<size_t>(t), static_cast<size_t>(b)) * f_rows[static_cast<size_t>(t)][static_cast<size_t>(b)];
        if (!(at_ft == data.gammas[static_cast<size_t>(t)]))
            throw error("<a_t, f_t> != gamma_t at " + d.tableau_name(lam, t));
    }
    for (int s = 0; s < k; ++s)
        for (int t = s + 1; t < k; ++t)
            if (!pair_form(f_rows[static_cast<size_t>(s)], f_rows[static_cast<size_t>(t)]).is_zero())
                throw error("seminormal vectors are not orthogonal");

    return data;
}

Scalar gram_determinant(const ContentTable& ct, int lam) {
    const CellDatum& d = *ct.datum();
    SeminormalData data = seminormal_data(ct, lam);
    Scalar prod = Scalar::one(d.field());
    for (const Scalar& g : data.gammas) prod *= g;
    Scalar det = gram_matrix(d, lam).determinant();
    if (!(prod == det))
        throw error("gamma product does not match the Gram determinant at lambda = " +
                    d.lambda_name(lam));
    return prod;
}

namespace {

std::vector<AlgebraElement> all_ft_elements(const ContentTable& ct, bool override_gates) {
    const CellDatum& d = *ct.datum();
    SeparationResult sep = check_separation(ct);
    if (!sep.separated) throw error("separation violated");
    std::vector<AlgebraElement> fts;
    for (int g = 0; g < d.num_tableaux(); ++g)
        fts.push_back(ft_algebra_element(ct, g, override_gates));
    return fts;
}

}  // namespace

CheckReport idempotent_suite(const ContentTable& ct, bool override_gates) {
    const CellDatum& d = *ct.datum();
    CheckReport report;
    std::vector<AlgebraElement> fts = all_ft_elements(ct, override_gates);
    int total = d.num_tableaux();

    bool idem = true;
    for (int t = 0; t < total; ++t) idem = idem && fts[static_cast<size_t>(t)] * fts[static_cast<size_t>(t)] == fts[static_cast<size_t>(t)];
    report.add("F_t^2 = F_t for all t", idem);

    bool orth = true;
    for (int s = 0; s < total && orth; ++s)
        for (int t = 0; t < total && orth; ++t)
            if (s != t) orth = (fts[static_cast<size_t>(s)] * fts[static_cast<size_t>(t)]).is_zero();
    report.add("F_s F_t = 0 for s != t", orth);

    AlgebraElement sum(&d);
    for (const auto& f : fts) sum = sum + f;
    report.add("sum_t F_t = 1", sum == d.one());

    bool central = true;
    for (int lam = 0; lam < d.num_lambdas() && central; ++lam) {
        AlgebraElement f_lam(&d);
        for (int t = 0; t < d.tableau_count(lam); ++t)
            f_lam = f_lam + fts[static_cast<size_t>(d.tableau_global(lam, t))];
        for (int b = 0; b < d.dim() && central; ++b) {
            AlgebraElement ab = AlgebraElement::basis(&d, b);
            central = f_lam * ab == ab * f_lam;
        }
    }
    report.add("F_lambda = sum_{t in T(lambda)} F_t is central", central);

    bool scaled = true;
    for (int lam = 0; lam < d.num_lambdas() && scaled; ++lam) {
        SeminormalData data = seminormal_data(ct, lam);
        for (int t = 0; t < d.tableau_count(lam) && scaled; ++t) {
            int g = d.tableau_global(lam, t);
            AlgebraElement att = AlgebraElement::basis(&d, d.basis_index(lam, t, t));
            AlgebraElement ftt = fts[static_cast<size_t>(g)] * att * fts[static_cast<size_t>(g)];
            scaled = fts[static_cast<size_t>(g)] == ftt * data.gammas[static_cast<size_t>(t)].inverse();
        }
    }
    report.add("F_t = gamma_t^{-1} f_tt", scaled);
    return report;
}

CheckReport spectral_identities(const ContentTable& ct, bool override_gates) {
    const CellDatum& d = *ct.datum();
    CheckReport report;
    std::vector<AlgebraElement> fts = all_ft_elements(ct, override_gates);
    auto sets = content_value_sets(ct);

    bool expansion = true;
    for (int i = 0; i < ct.num_jm() && expansion; ++i) {
        AlgebraElement sum(&d);
        for (int g = 0; g < d.num_tableaux(); ++g)
            sum = sum + fts[static_cast<size_t>(g)] * ct.content(g, i);
        expansion = sum == ct.jm(i);
    }
    report.add("L_i = sum_t c_t(i) F_t", expansion);

    bool minpoly = true;
    std::string detail;
    for (int i = 0; i < ct.num_jm() && minpoly; ++i) {
        Poly expect = Poly::constant(Scalar::one(d.field()));
        Poly x(d.field(), {Scalar::zero(d.field()), Scalar::one(d.field())});
        for (const Scalar& c : sets[static_cast<size_t>(i)]) expect = expect * (x - Poly::constant(c));
        Poly got = regular_representation(ct.jm(i)).minimal_polynomial();
        if (!(got == expect)) {
            minpoly = false;
            detail = "L_" + std::to_string(i + 1);
        }
    }
    report.add("min poly of L_i is prod_{c in C(i)} (X - c)", minpoly, detail);
    return report;
}

CheckReport maximal_abelian_check(const ContentTable& ct, bool override_gates) {
    const CellDatum& d = *ct.datum();
    CheckReport report;
    std::vector<AlgebraElement> fts = all_ft_elements(ct, override_gates);
    int total = d.num_tableaux();
    int n = d.dim();

    Matrix span(d.field(), static_cast<size_t>(total), static_cast<size_t>(n));
    for (int t = 0; t < total; ++t)
        for (const auto& [b, c] : fts[static_cast<size_t>(t)].coeffs())
            span.at(static_cast<size_t>(t), static_cast<size_t>(b)) = c;
    report.add("span{F_t} has dimension |T(Lambda)|",
               span.rank() == static_cast<size_t>(total),
               "dim = " + std::to_string(span.rank()));

    // centralizer of the JM family inside the algebra: kernel of
    // x -> (x L_i - L_i x)_i over the basis coefficients of x
    Matrix system(d.field(), static_cast<size_t>(ct.num_jm() * n), static_cast<size_t>(n));
    for (int i = 0; i < ct.num_jm(); ++i) {
        const AlgebraElement& L = ct.jm(i);
        for (int b = 0; b < n; ++b) {
            AlgebraElement ab = AlgebraElement::basis(&d, b);
            AlgebraElement comm = ab * L - L * ab;
            for (const auto& [r, c] : comm.coeffs())
                system.at(static_cast<size_t>(i * n + r), static_cast<size_t>(b)) = c;
        }
    }
    size_t centralizer_dim = system.kernel_dimension();
    report.add("centralizer of {L_i} has dimension |T(Lambda)|",
               centralizer_dim == static_cast<size_t>(total),
               "dim = " + std::to_string(centralizer_dim));
    return report;
}

}  // namespace semicell
