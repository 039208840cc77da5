#include "semicell/blocks.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace semicell {

ModularInstance lift_hecke(int n, const FieldPtr& k, const Scalar& q, bool override_gates) {
    DvrContext ctx(k, q);
    Instance over_K = build_hecke(n, ctx.ambient, Scalar::variable(ctx.ambient), override_gates);
    Instance over_k = build_hecke(n, k, q, override_gates);
    return ModularInstance{ctx, std::move(over_K), std::move(over_k)};
}

ModularInstance lift_toy(const std::vector<Scalar>& contents_over_K, const DvrContext& ctx) {
    for (const Scalar& c : contents_over_K) {
        if (!c.field()->same(*ctx.ambient))
            throw error("toy lift: contents must lie in " + ctx.ambient->name());
        Valuation v = dvr_valuation(c, ctx);
        if (!v.infinite && v.v < 0) throw error("toy lift: content not in R");
    }
    Instance over_K = build_toy(contents_over_K);
    std::vector<Scalar> reduced;
    for (const Scalar& c : contents_over_K) reduced.push_back(reduce_mod_pi(c, ctx));
    Instance over_k = build_toy(reduced);
    return ModularInstance{ctx, std::move(over_K), std::move(over_k)};
}

std::vector<ResidueClass> residue_classes(const ModularInstance& mi) {
    const CellDatum& d = *mi.over_K.datum;
    const ContentTable& ct = mi.over_K.content;

    // contents must lie in R
    for (int g = 0; g < d.num_tableaux(); ++g)
        for (int i = 0; i < ct.num_jm(); ++i) {
            Valuation v = dvr_valuation(ct.content(g, i), mi.ctx);
            if (!v.infinite && v.v < 0)
                throw error("content c_t(i) outside R at tableau " + std::to_string(g) +
                            ", i = " + std::to_string(i + 1));
        }

    // c - c' invertible in R whenever the residues differ
    std::vector<Scalar> all;
    for (const auto& set : content_value_sets(ct))
        for (const Scalar& c : set) {
            bool seen = false;
            for (const Scalar& s : all) seen = seen || s == c;
            if (!seen) all.push_back(c);
        }
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t b = a + 1; b < all.size(); ++b) {
            if (reduce_mod_pi(all[a], mi.ctx) == reduce_mod_pi(all[b], mi.ctx)) continue;
            Valuation v = dvr_valuation(all[a] - all[b], mi.ctx);
            if (v.infinite || v.v != 0)
                throw error("hypothesis violated: " + all[a].to_string() + " - " +
                            all[b].to_string() + " is not invertible in R");
        }

    std::vector<ResidueClass> classes;
    for (int g = 0; g < d.num_tableaux(); ++g) {
        std::vector<Scalar> res;
        for (int i = 0; i < ct.num_jm(); ++i) res.push_back(reduce_mod_pi(ct.content(g, i), mi.ctx));
        bool placed = false;
        for (auto& cls : classes)
            if (cls.residues == res) {
                cls.members.push_back(g);
                placed = true;
                break;
            }
        if (!placed) classes.push_back(ResidueClass{std::move(res), {g}});
    }
    return classes;
}

std::vector<std::vector<int>> linkage_classes(const ModularInstance& mi,
                                              const std::vector<ResidueClass>& classes) {
    const CellDatum& d = *mi.over_K.datum;
    int L = d.num_lambdas();
    std::vector<int> parent(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto& cls : classes) {
        int first = d.tableau_from_global(cls.members.front()).first;
        for (int g : cls.members) parent[static_cast<size_t>(find(d.tableau_from_global(g).first))] = find(first);
    }
    std::map<int, std::vector<int>> groups;
    for (int lam = 0; lam < L; ++lam) groups[find(lam)].push_back(lam);
    std::vector<std::vector<int>> out;
    for (auto& [root, lams] : groups) out.push_back(std::move(lams));
    std::sort(out.begin(), out.end());
    return out;
}

AlgebraElement class_idempotent(const ModularInstance& mi, const ResidueClass& cls,
                                bool override_gates) {
    const CellDatum& dK = *mi.over_K.datum;
    const CellDatum& dk = *mi.over_k.datum;
    AlgebraElement ft_sum(&dK);
    for (int g : cls.members) ft_sum = ft_sum + ft_algebra_element(mi.over_K.content, g, override_gates);

    AlgebraElement reduced(&dk);
    for (const auto& [b, c] : ft_sum.coeffs()) {
        Valuation v = dvr_valuation(c, mi.ctx);
        if (!v.infinite && v.v < 0)
            throw error("F_T not integral: coordinate " + dK.basis_name(b) +
                        " has valuation " + std::to_string(v.v));
        reduced.set_coeff(b, reduce_mod_pi(c, mi.ctx));
    }
    if (!(reduced * reduced == reduced)) throw error("reduced class sum is not idempotent");
    if (!(reduced.star() == reduced)) throw error("reduced class sum is not star-invariant");
    return reduced;
}

BlocksData compute_blocks(const ModularInstance& mi, bool override_gates) {
    const CellDatum& dk = *mi.over_k.datum;
    BlocksData data;
    data.classes = residue_classes(mi);
    data.tableau_class.assign(static_cast<size_t>(dk.num_tableaux()), -1);
    for (size_t c = 0; c < data.classes.size(); ++c)
        for (int g : data.classes[c].members) data.tableau_class[static_cast<size_t>(g)] = static_cast<int>(c);
    data.linkage = linkage_classes(mi, data.classes);
    for (const auto& cls : data.classes)
        data.class_idem.push_back(class_idempotent(mi, cls, override_gates));

    int n = dk.dim();
    data.g.reserve(static_cast<size_t>(n));
    data.g_to_a = Matrix(dk.field(), static_cast<size_t>(n), static_cast<size_t>(n));
    for (int b = 0; b < n; ++b) {
        BasisKey key = dk.basis_key(b);
        int gs = dk.tableau_global(key.lam, key.s);
        int gt = dk.tableau_global(key.lam, key.t);
        AlgebraElement gb = data.class_idem[static_cast<size_t>(data.tableau_class[static_cast<size_t>(gs)])] *
                            AlgebraElement::basis(&dk, b) *
                            data.class_idem[static_cast<size_t>(data.tableau_class[static_cast<size_t>(gt)])];
        for (const auto& [r, c] : gb.coeffs())
            data.g_to_a.at(static_cast<size_t>(r), static_cast<size_t>(b)) = c;
        data.g.push_back(std::move(gb));
    }
    data.a_to_g = data.g_to_a.inverse();
    return data;
}

BlockBasis g_basis(const ModularInstance& mi, const BlocksData& data,
                   const std::vector<int>& gamma) {
    const CellDatum& dk = *mi.over_k.datum;
    BlockBasis block;
    block.lambdas = gamma;
    std::vector<bool> in_gamma(static_cast<size_t>(dk.num_lambdas()), false);
    for (int lam : gamma) in_gamma[static_cast<size_t>(lam)] = true;

    for (int b = 0; b < dk.dim(); ++b)
        if (in_gamma[static_cast<size_t>(dk.basis_key(b).lam)]) {
            block.basis_indices.push_back(b);
            block.g.push_back(data.g[static_cast<size_t>(b)]);
        }

    // unitriangular relation to the a-basis
    for (int b : block.basis_indices) {
        if (!data.g_to_a.at(static_cast<size_t>(b), static_cast<size_t>(b)).is_one())
            throw error("g-basis is not unitriangular");
        for (int r = b + 1; r < dk.dim(); ++r)
            if (!data.g_to_a.at(static_cast<size_t>(r), static_cast<size_t>(b)).is_zero())
                throw error("g-basis has a term below the diagonal");
    }

    // span closure and cross-class vanishing
    for (int b : block.basis_indices)
        for (int b2 = 0; b2 < dk.dim(); ++b2) {
            AlgebraElement prod = data.g[static_cast<size_t>(b)] * data.g[static_cast<size_t>(b2)];
            if (in_gamma[static_cast<size_t>(dk.basis_key(b2).lam)]) {
                // express in the g-basis and check support stays inside gamma
                std::vector<Scalar> coords(static_cast<size_t>(dk.dim()), Scalar::zero(dk.field()));
                for (const auto& [r, c] : prod.coeffs()) {
                    for (int row = 0; row < dk.dim(); ++row) {
                        const Scalar& m = data.a_to_g.at(static_cast<size_t>(row), static_cast<size_t>(r));
                        if (!m.is_zero()) coords[static_cast<size_t>(row)] += m * c;
                    }
                }
                for (int row = 0; row < dk.dim(); ++row)
                    if (!coords[static_cast<size_t>(row)].is_zero() &&
                        !in_gamma[static_cast<size_t>(dk.basis_key(row).lam)])
                        throw error("g-basis span is not closed under multiplication");
            } else {
                if (!prod.is_zero()) throw error("cross-class product of g-basis elements is nonzero");
            }
        }

    // central idempotent of the block: sum of G_T over classes inside gamma
    AlgebraElement g_gamma(&dk);
    for (size_t c = 0; c < data.classes.size(); ++c) {
        int lam = dk.tableau_from_global(data.classes[c].members.front()).first;
        if (in_gamma[static_cast<size_t>(lam)]) g_gamma = g_gamma + data.class_idem[c];
    }
    block.g_gamma = std::move(g_gamma);
    return block;
}

namespace {

std::vector<std::vector<Scalar>> residue_value_sets(const ModularInstance& mi) {
    const ContentTable& ct = mi.over_K.content;
    const CellDatum& d = *mi.over_K.datum;
    std::vector<std::vector<Scalar>> sets(static_cast<size_t>(ct.num_jm()));
    for (int i = 0; i < ct.num_jm(); ++i)
        for (int g = 0; g < d.num_tableaux(); ++g) {
            Scalar r = reduce_mod_pi(ct.content(g, i), mi.ctx);
            bool seen = false;
            for (const Scalar& s : sets[static_cast<size_t>(i)]) seen = seen || s == r;
            if (!seen) sets[static_cast<size_t>(i)].push_back(r);
        }
    return sets;
}

}  // namespace

CheckReport block_report(const ModularInstance& mi, bool override_gates) {
    const CellDatum& dk = *mi.over_k.datum;
    const ContentTable& ctk = mi.over_k.content;
    CheckReport report;
    BlocksData data = compute_blocks(mi, override_gates);

    size_t nc = data.classes.size();
    bool orth = true, idem = true;
    for (size_t a = 0; a < nc; ++a) {
        idem = idem && data.class_idem[a] * data.class_idem[a] == data.class_idem[a];
        for (size_t b = 0; b < nc; ++b)
            if (a != b) orth = orth && (data.class_idem[a] * data.class_idem[b]).is_zero();
    }
    report.add("G_T^2 = G_T for every residue class", idem);
    report.add("G_S G_T = 0 for S != T", orth);

    AlgebraElement total(&dk);
    for (const auto& gt : data.class_idem) total = total + gt;
    report.add("sum_T G_T = 1", total == dk.one());

    // block idempotents
    std::vector<BlockBasis> blocks;
    for (const auto& gamma : data.linkage) blocks.push_back(g_basis(mi, data, gamma));
    AlgebraElement gsum(&dk);
    bool central = true;
    for (const auto& blk : blocks) {
        gsum = gsum + blk.g_gamma;
        for (int b = 0; b < dk.dim() && central; ++b) {
            AlgebraElement ab = AlgebraElement::basis(&dk, b);
            central = blk.g_gamma * ab == ab * blk.g_gamma;
        }
    }
    report.add("each G_Gamma is central", central);
    report.add("sum_Gamma G_Gamma = 1", gsum == dk.one());

    int dim_total = 0;
    for (const auto& blk : blocks) dim_total += blk.dimension();
    report.add("block dimensions sum to dim A_k", dim_total == dk.dim());

    // Jordan decomposition of the JM elements over A_k: the class sums
    // give the semisimple part. The naive eigenvalue identities of the
    // separated case fail once classes merge (the individual F_t are not
    // integral), so the honest statements are nilpotency of the
    // difference and the squarefree minimum polynomial of the part built
    // from the G_T.
    bool jm_nilpotent = true, semisimple_minpoly = true;
    for (int i = 0; i < ctk.num_jm(); ++i) {
        AlgebraElement semi(&dk);
        for (size_t c = 0; c < nc; ++c)
            semi = semi + data.class_idem[c] * data.classes[c].residues[static_cast<size_t>(i)];
        Matrix nil = regular_representation(ctk.jm(i) - semi);
        jm_nilpotent = jm_nilpotent && nil.pow(static_cast<unsigned long>(dk.dim())).is_zero();

        std::vector<Scalar> distinct;
        for (size_t c = 0; c < nc; ++c) {
            const Scalar& r = data.classes[c].residues[static_cast<size_t>(i)];
            bool seen = false;
            for (const Scalar& s : distinct) seen = seen || s == r;
            if (!seen) distinct.push_back(r);
        }
        Poly expect = Poly::constant(Scalar::one(dk.field()));
        Poly x(dk.field(), {Scalar::zero(dk.field()), Scalar::one(dk.field())});
        for (const Scalar& r : distinct) expect = expect * (x - Poly::constant(r));
        semisimple_minpoly = semisimple_minpoly &&
                             regular_representation(semi).minimal_polynomial() == expect;
    }
    report.add("L_i - sum_T r_T(i) G_T is nilpotent", jm_nilpotent);
    report.add("min poly of sum_T r_T(i) G_T is prod_{r in R(i)} (X - r)", semisimple_minpoly);

    // root set of the minimum polynomial of L_i on A_k is exactly R(i)
    auto rsets = residue_value_sets(mi);
    bool minpoly_roots = true;
    for (int i = 0; i < ctk.num_jm() && minpoly_roots; ++i) {
        Poly m = regular_representation(ctk.jm(i)).minimal_polynomial();
        Matrix prod = Matrix::identity(dk.field(), static_cast<size_t>(dk.dim()));
        Matrix rep = regular_representation(ctk.jm(i));
        for (const Scalar& r : rsets[static_cast<size_t>(i)]) {
            minpoly_roots = minpoly_roots && m.eval(r).is_zero();
            Matrix shifted = rep;
            for (int k2 = 0; k2 < dk.dim(); ++k2)
                shifted.at(static_cast<size_t>(k2), static_cast<size_t>(k2)) -= r;
            prod = prod * shifted;
        }
        minpoly_roots = minpoly_roots && prod.pow(static_cast<unsigned long>(dk.dim())).is_zero();
    }
    report.add("roots of the min poly of L_i on A_k are exactly R(i)", minpoly_roots);

    // triangular eigenvalue relations in the g-basis: g_st L_i has
    // g-expansion r_t(i) g_st plus strictly more dominant terms, and
    // symmetrically on the left
    bool g_triangular = true;
    for (int b = 0; b < dk.dim() && g_triangular; ++b) {
        BasisKey key = dk.basis_key(b);
        int gs = dk.tableau_global(key.lam, key.s);
        int gt = dk.tableau_global(key.lam, key.t);
        for (int i = 0; i < ctk.num_jm() && g_triangular; ++i) {
            const Scalar& rs = data.classes[static_cast<size_t>(data.tableau_class[static_cast<size_t>(gs)])].residues[static_cast<size_t>(i)];
            const Scalar& rt = data.classes[static_cast<size_t>(data.tableau_class[static_cast<size_t>(gt)])].residues[static_cast<size_t>(i)];
            auto coords_of = [&](const AlgebraElement& e) {
                std::vector<Scalar> coords(static_cast<size_t>(dk.dim()), Scalar::zero(dk.field()));
                for (const auto& [r, c] : e.coeffs())
                    for (int row = 0; row < dk.dim(); ++row) {
                        const Scalar& mcoef = data.a_to_g.at(static_cast<size_t>(row), static_cast<size_t>(r));
                        if (!mcoef.is_zero()) coords[static_cast<size_t>(row)] += mcoef * c;
                    }
                return coords;
            };
            std::vector<Scalar> right = coords_of(data.g[static_cast<size_t>(b)] * ctk.jm(i));
            std::vector<Scalar> left = coords_of(ctk.jm(i) * data.g[static_cast<size_t>(b)]);
            g_triangular = g_triangular && right[static_cast<size_t>(b)] == rt &&
                           left[static_cast<size_t>(b)] == rs;
            for (int r = b + 1; r < dk.dim() && g_triangular; ++r)
                g_triangular = right[static_cast<size_t>(r)].is_zero() && left[static_cast<size_t>(r)].is_zero();
        }
    }
    report.add("g_st L_i = r_t(i) g_st + dominant terms (and left analogue)", g_triangular);

    // g_t is a basis of each cell module, orthogonal across residue classes
    bool module_basis = true, module_orth = true;
    for (int lam = 0; lam < dk.num_lambdas(); ++lam) {
        int k = dk.tableau_count(lam);
        Matrix rows(dk.field(), static_cast<size_t>(k), static_cast<size_t>(k));
        std::vector<std::vector<Scalar>> gt_rows;
        for (int t = 0; t < k; ++t) {
            int g = dk.tableau_global(lam, t);
            Matrix act = module_action(dk, lam, data.class_idem[static_cast<size_t>(data.tableau_class[static_cast<size_t>(g)])]);
            std::vector<Scalar> row(static_cast<size_t>(k));
            for (int v = 0; v < k; ++v) {
                row[static_cast<size_t>(v)] = act.at(static_cast<size_t>(t), static_cast<size_t>(v));
                rows.at(static_cast<size_t>(t), static_cast<size_t>(v)) = row[static_cast<size_t>(v)];
            }
            gt_rows.push_back(std::move(row));
        }
        module_basis = module_basis && rows.rank() == static_cast<size_t>(k);
        Matrix gram = gram_matrix(dk, lam);
        for (int t = 0; t < k; ++t)
            for (int u = 0; u < k; ++u) {
                if (data.tableau_class[static_cast<size_t>(dk.tableau_global(lam, t))] ==
                    data.tableau_class[static_cast<size_t>(dk.tableau_global(lam, u))])
                    continue;
                Scalar form = Scalar::zero(dk.field());
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b)
                        form += gt_rows[static_cast<size_t>(t)][static_cast<size_t>(a)] *
                                gram.at(static_cast<size_t>(a), static_cast<size_t>(b)) *
                                gt_rows[static_cast<size_t>(u)][static_cast<size_t>(b)];
                module_orth = module_orth && form.is_zero();
            }
    }
    report.add("{g_t} is a basis of each C(lambda)", module_basis);
    report.add("<g_t, g_u> = 0 for t, u in different residue classes", module_orth);

    // power sums of the JM family are central
    bool psums = true;
    for (int power = 1; power <= 2 && psums; ++power) {
        AlgebraElement p(&dk);
        for (int i = 0; i < ctk.num_jm(); ++i) {
            AlgebraElement li = ctk.jm(i);
            p = p + (power == 1 ? li : li * li);
        }
        for (int b = 0; b < dk.dim() && psums; ++b) {
            AlgebraElement ab = AlgebraElement::basis(&dk, b);
            psums = p * ab == ab * p;
        }
    }
    report.add("power sums p_1, p_2 of the JM family are central", psums);

    return report;
}

bool hecke_block_predicate(const Partition& lambda, const Partition& mu, const Scalar& q) {
    auto residue_multiset = [&](const Partition& p) {
        std::vector<std::string> keys;
        for (size_t r = 0; r < p.size(); ++r)
            for (int c = 0; c < p[r]; ++c)
                keys.push_back(quantum_integer(c - static_cast<long>(r), q).key());
        std::sort(keys.begin(), keys.end());
        return keys;
    };
    return residue_multiset(lambda) == residue_multiset(mu);
}

}  // namespace semicell
