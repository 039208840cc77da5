#include "semicell/instances.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace semicell {

// ----------------------------------------------------------- ContentTable

ContentTable::ContentTable(const CellDatum* datum, int num_jm,
                           std::vector<std::vector<Scalar>> contents,
                           std::function<AlgebraElement(int)> jm_builder)
    : datum_(datum), num_jm_(num_jm), contents_(std::move(contents)),
      jm_builder_(std::move(jm_builder)),
      jm_cache_(static_cast<size_t>(num_jm)) {}

const AlgebraElement& ContentTable::jm(int i) const {
    auto& slot = jm_cache_[static_cast<size_t>(i)];
    if (!slot) slot = jm_builder_(i);
    return *slot;
}

// ------------------------------------------------------------ toy algebra

namespace {

class ToyDatum : public CellDatum {
public:
    ToyDatum(std::vector<Scalar> contents) : c_(std::move(contents)) {
        n_ = static_cast<int>(c_.size());
        field_ = c_[0].field();
        for (const Scalar& c : c_)
            if (!c.field()->same(*field_)) throw error("toy contents must share one field");
        // label i has basis a_i = prod_{j<i}(x - c_j); label n is the most
        // dominant, so internal index lam corresponds to label n - lam
        std::vector<std::string> lambda_names, empty;
        std::vector<std::vector<std::string>> tableau_names;
        for (int lam = 0; lam < n_; ++lam) {
            std::string label = std::to_string(n_ - lam);
            lambda_names.push_back(label);
            tableau_names.push_back({label});
        }
        init_layout(field_, std::move(lambda_names), std::move(tableau_names));
        // modulus and the Newton basis polynomials
        Poly x(field_, {Scalar::zero(field_), Scalar::one(field_)});
        modulus_ = Poly::constant(Scalar::one(field_));
        for (const Scalar& c : c_) modulus_ = modulus_ * (x - Poly::constant(c));
        basis_poly_.resize(static_cast<size_t>(n_));
        Poly acc = Poly::constant(Scalar::one(field_));
        for (int label = 1; label <= n_; ++label) {
            basis_poly_[static_cast<size_t>(label - 1)] = acc;
            acc = acc * (x - Poly::constant(c_[static_cast<size_t>(label - 1)]));
        }
    }

    bool lambda_dominates(int a, int b) const override { return a < b; }
    bool tableau_dominates(int, int, int) const override { return false; }

    int label_of_lambda(int lam) const { return n_ - lam; }
    int lambda_of_label(int label) const { return n_ - label; }
    const Scalar& content_of_label(int label) const { return c_[static_cast<size_t>(label - 1)]; }
    int size() const { return n_; }

    AlgebraElement from_poly(Poly p) const {
        p = p % modulus_;
        AlgebraElement e(this);
        // peel Newton coefficients: b_label = p(c_label), then divide
        for (int label = 1; label <= n_; ++label) {
            const Scalar& c = c_[static_cast<size_t>(label - 1)];
            Scalar b = p.eval(c);
            if (!b.is_zero()) e.set_coeff(basis_index(lambda_of_label(label), 0, 0), b);
            Poly linear(field_, {-c, Scalar::one(field_)});
            p = p.divmod(linear).first;
        }
        return e;
    }

protected:
    AlgebraElement multiply_basis(int bi, int bj) const override {
        int li = label_of_lambda(basis_key(bi).lam);
        int lj = label_of_lambda(basis_key(bj).lam);
        return from_poly(basis_poly_[static_cast<size_t>(li - 1)] *
                         basis_poly_[static_cast<size_t>(lj - 1)]);
    }

    AlgebraElement compute_one() const override {
        return AlgebraElement::basis(this, basis_index(lambda_of_label(1), 0, 0));
    }

private:
    std::vector<Scalar> c_;
    int n_ = 0;
    FieldPtr field_;
    Poly modulus_;
    std::vector<Poly> basis_poly_;
};

}  // namespace

Instance build_toy(const std::vector<Scalar>& contents) {
    if (contents.empty()) throw error("toy algebra needs at least one content");
    auto datum = std::make_shared<ToyDatum>(contents);
    const ToyDatum* toy = datum.get();
    const FieldPtr& f = datum->field();
    int n = toy->size();
    std::vector<std::vector<Scalar>> table;
    for (int g = 0; g < datum->num_tableaux(); ++g) {
        auto [lam, t] = datum->tableau_from_global(g);
        (void)t;
        table.push_back({toy->content_of_label(toy->label_of_lambda(lam))});
    }
    auto jm_builder = [toy, f, n](int) {
        // x = c_1 a_1 + a_2 (a_2 = x - c_1), truncated at n = 1
        AlgebraElement x(toy);
        Scalar c1 = toy->content_of_label(1);
        if (!c1.is_zero()) x.set_coeff(toy->basis_index(toy->lambda_of_label(1), 0, 0), c1);
        if (n >= 2) x.set_coeff(toy->basis_index(toy->lambda_of_label(2), 0, 0), Scalar::one(f));
        return x;
    };
    ContentTable ct(datum.get(), 1, std::move(table), jm_builder);
    return Instance{datum, std::move(ct)};
}

// --------------------------------------------------------- matrix algebra

namespace {

class MatrixAlgebraDatum : public CellDatum {
public:
    MatrixAlgebraDatum(int n, FieldPtr field) : n_(n) {
        std::vector<std::string> tabs;
        for (int i = 1; i <= n; ++i) tabs.push_back(std::to_string(i));
        init_layout(std::move(field), {"1"}, {std::move(tabs)});
    }

    bool lambda_dominates(int, int) const override { return false; }
    bool tableau_dominates(int, int i, int j) const override { return i < j; }

    int size() const { return n_; }

protected:
    AlgebraElement multiply_basis(int bi, int bj) const override {
        BasisKey a = basis_key(bi), b = basis_key(bj);
        AlgebraElement r(this);
        if (a.t == b.s) r = AlgebraElement::basis(this, basis_index(0, a.s, b.t));
        return r;
    }

    AlgebraElement compute_one() const override {
        AlgebraElement e(this);
        for (int i = 0; i < n_; ++i)
            e.set_coeff(basis_index(0, i, i), Scalar::one(field()));
        return e;
    }

private:
    int n_;
};

}  // namespace

Instance build_matrix_algebra(int n, const FieldPtr& field) {
    if (n < 1) throw error("matrix algebra needs n >= 1");
    auto datum = std::make_shared<MatrixAlgebraDatum>(n, field);
    std::vector<std::vector<Scalar>> table;
    for (int t = 0; t < n; ++t) {
        std::vector<Scalar> row;
        for (int i = 0; i < n; ++i)
            row.push_back(t == i ? Scalar::one(field) : Scalar::zero(field));
        table.push_back(std::move(row));
    }
    const CellDatum* d = datum.get();
    auto jm_builder = [d](int i) { return AlgebraElement::basis(d, d->basis_index(0, i, i)); };
    ContentTable ct(d, n, std::move(table), jm_builder);
    return Instance{datum, std::move(ct)};
}

// ------------------------------------------------------------------ Hecke

namespace {

using TVec = std::map<int, Scalar>;  // permutation rank -> coefficient

class HeckeDatum : public CellDatum {
public:
    HeckeDatum(int n, FieldPtr field, Scalar q) : n_(n), q_(std::move(q)) {
        if (q_.is_zero()) throw error("hecke parameter q must be invertible");
        qm1_ = q_ - Scalar::one(field);

        partitions_ = partitions_of(n);
        std::vector<std::string> lambda_names;
        std::vector<std::vector<std::string>> tableau_names;
        for (const Partition& p : partitions_) {
            tableaux_.push_back(standard_tableaux(p));
            lambda_names.push_back(partition_name(p));
            std::vector<std::string> names;
            for (const Tableau& t : tableaux_.back()) names.push_back(t.name());
            tableau_names.push_back(std::move(names));
        }
        init_layout(std::move(field), std::move(lambda_names), std::move(tableau_names));

        // permutations in lexicographic rank order
        Perm p = Perm::identity(n);
        do {
            perm_rank_.emplace(p.img, static_cast<int>(perms_.size()));
            perms_.push_back(p);
        } while (std::next_permutation(p.img.begin(), p.img.end()));
    }

    bool lambda_dominates(int a, int b) const override {
        return partition_dominates_strictly(partitions_[static_cast<size_t>(a)],
                                            partitions_[static_cast<size_t>(b)]);
    }
    bool tableau_dominates(int lam, int i, int j) const override {
        return tableau_dominates_strictly(tableaux_[static_cast<size_t>(lam)][static_cast<size_t>(i)],
                                          tableaux_[static_cast<size_t>(lam)][static_cast<size_t>(j)]);
    }

    const std::vector<Partition>& partitions() const { return partitions_; }
    const std::vector<Tableau>& tableaux(int lam) const { return tableaux_[static_cast<size_t>(lam)]; }
    const Scalar& q() const { return q_; }
    int strands() const { return n_; }
    int num_perms() const { return static_cast<int>(perms_.size()); }
    const Perm& perm(int rank) const { return perms_[static_cast<size_t>(rank)]; }
    int rank_of(const Perm& w) const { return perm_rank_.at(w.img); }

    // --- T-basis arithmetic ------------------------------------------

    void t_add(TVec& acc, int rank, const Scalar& c) const {
        auto it = acc.find(rank);
        if (it == acc.end()) {
            if (!c.is_zero()) acc.emplace(rank, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }

    // T_{s_i} * x
    TVec t_left_mul_s(int i, const TVec& x) const {
        TVec out;
        for (const auto& [rank, c] : x) {
            const Perm& w = perms_[static_cast<size_t>(rank)];
            Perm sw = w;
            std::swap(sw.img[static_cast<size_t>(i)], sw.img[static_cast<size_t>(i + 1)]);
            int swr = rank_of(sw);
            if (w.img[static_cast<size_t>(i)] < w.img[static_cast<size_t>(i + 1)]) {
                t_add(out, swr, c);
            } else {
                t_add(out, swr, c * q_);
                t_add(out, rank, c * qm1_);
            }
        }
        return out;
    }

    // x * T_{s_i}
    TVec t_right_mul_s(const TVec& x, int i) const {
        TVec out;
        for (const auto& [rank, c] : x) {
            const Perm& w = perms_[static_cast<size_t>(rank)];
            Perm ws = w;
            int pi = -1, pi1 = -1;
            for (int k = 0; k < n_; ++k) {
                if (ws.img[static_cast<size_t>(k)] == i) pi = k;
                if (ws.img[static_cast<size_t>(k)] == i + 1) pi1 = k;
            }
            std::swap(ws.img[static_cast<size_t>(pi)], ws.img[static_cast<size_t>(pi1)]);
            int wsr = rank_of(ws);
            if (pi < pi1) {
                t_add(out, wsr, c);
            } else {
                t_add(out, wsr, c * q_);
                t_add(out, rank, c * qm1_);
            }
        }
        return out;
    }

    TVec t_left_mul(const Perm& v, TVec x) const {
        std::vector<int> word = v.reduced_word();
        for (size_t k = word.size(); k-- > 0;) x = t_left_mul_s(word[k], x);
        return x;
    }

    TVec t_right_mul(TVec x, const Perm& v) const {
        for (int i : v.reduced_word()) x = t_right_mul_s(x, i);
        return x;
    }

    TVec t_mul(const TVec& x, const TVec& y) const {
        TVec out;
        for (const auto& [rank, c] : x) {
            TVec term = t_left_mul(perms_[static_cast<size_t>(rank)], y);
            for (const auto& [r2, c2] : term) t_add(out, r2, c * c2);
        }
        return out;
    }

    // --- Murphy basis ------------------------------------------------

    void ensure_murphy() const {
        if (!murphy_.empty()) return;
        const FieldPtr& f = field();
        int N = num_perms();
        murphy_.resize(static_cast<size_t>(dim()));
        for (int lam = 0; lam < num_lambdas(); ++lam) {
            // m_lambda = sum of T_w over the row stabilizer of t^lambda
            const Tableau& super = superstandard_tableau(partitions_[static_cast<size_t>(lam)]);
            std::vector<int> row_of(static_cast<size_t>(n_));
            for (size_t r = 0; r < super.rows.size(); ++r)
                for (int v : super.rows[r]) row_of[static_cast<size_t>(v - 1)] = static_cast<int>(r);
            TVec m_lam;
            for (int rank = 0; rank < N; ++rank) {
                const Perm& w = perms_[static_cast<size_t>(rank)];
                bool stab = true;
                for (int a = 0; a < n_ && stab; ++a)
                    stab = row_of[static_cast<size_t>(w.of(a))] == row_of[static_cast<size_t>(a)];
                if (stab) m_lam.emplace(rank, Scalar::one(f));
            }
            const auto& tabs = tableaux_[static_cast<size_t>(lam)];
            int k = static_cast<int>(tabs.size());
            std::vector<Perm> d(tabs.size());
            for (int t = 0; t < k; ++t) d[static_cast<size_t>(t)] = tableau_permutation(tabs[static_cast<size_t>(t)]);
            for (int s = 0; s < k; ++s) {
                TVec left = t_left_mul(d[static_cast<size_t>(s)].inverse(), m_lam);
                for (int t = 0; t < k; ++t)
                    murphy_[static_cast<size_t>(basis_index(lam, s, t))] =
                        t_right_mul(left, d[static_cast<size_t>(t)]);
            }
        }
        // transition matrix: column b = murphy_[b] over the T-basis
        Matrix u(f, static_cast<size_t>(N), static_cast<size_t>(dim()));
        for (int b = 0; b < dim(); ++b)
            for (const auto& [rank, c] : murphy_[static_cast<size_t>(b)])
                u.at(static_cast<size_t>(rank), static_cast<size_t>(b)) = c;
        transition_inv_ = u.inverse();
    }

    AlgebraElement murphy_from_t(const TVec& v) const {
        ensure_murphy();
        AlgebraElement e(this);
        // sparse matrix-vector product with the inverse transition
        for (const auto& [rank, c] : v)
            for (int b = 0; b < dim(); ++b) {
                const Scalar& m = transition_inv_.at(static_cast<size_t>(b), static_cast<size_t>(rank));
                if (m.is_zero()) continue;
                e.set_coeff(b, e.coeff(b) + m * c);
            }
        return e;
    }

    const TVec& murphy_t_vec(int b) const {
        ensure_murphy();
        return murphy_[static_cast<size_t>(b)];
    }

    TVec jm_t_vec(int i) const {  // L_{i+1}, 0-based i
        TVec v;
        for (int j = 0; j < i; ++j) {
            Perm tr = Perm::transposition(n_, i, j);
            t_add(v, rank_of(tr), q_.pow(j - i));
        }
        return v;
    }

protected:
    AlgebraElement multiply_basis(int bi, int bj) const override {
        ensure_murphy();
        return murphy_from_t(t_mul(murphy_[static_cast<size_t>(bi)], murphy_[static_cast<size_t>(bj)]));
    }

    AlgebraElement compute_one() const override {
        TVec e;
        e.emplace(rank_of(Perm::identity(n_)), Scalar::one(field()));
        return murphy_from_t(e);
    }

private:
    int n_;
    Scalar q_, qm1_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<Tableau>> tableaux_;
    std::vector<Perm> perms_;
    std::map<std::vector<int>, int> perm_rank_;
    mutable std::vector<TVec> murphy_;
    mutable Matrix transition_inv_;
};

}  // namespace

Instance build_hecke(int n, const FieldPtr& field, const Scalar& q, bool override_gates) {
    if (n < 1) throw error("hecke algebra needs n >= 1");
    if (n > kHeckeModuleGate && !override_gates)
        throw error("size gate: hecke n <= " + std::to_string(kHeckeModuleGate) +
                    " at cell-module scale; override with --force-gates");
    if (!q.field()->same(*field)) throw error("hecke parameter must lie in the coefficient field");
    auto datum = std::make_shared<HeckeDatum>(n, field, q);
    const HeckeDatum* h = datum.get();

    std::vector<std::vector<Scalar>> table;
    for (int g = 0; g < datum->num_tableaux(); ++g) {
        auto [lam, t] = datum->tableau_from_global(g);
        const Tableau& tab = h->tableaux(lam)[static_cast<size_t>(t)];
        std::vector<Scalar> row;
        for (int i = 1; i <= n; ++i) {
            auto [r, c] = tab.cell_of(i);
            row.push_back(quantum_integer(c - r, q));
        }
        table.push_back(std::move(row));
    }
    auto jm_builder = [h](int i) { return h->murphy_from_t(h->jm_t_vec(i)); };
    ContentTable ct(datum.get(), n, std::move(table), jm_builder);
    return Instance{datum, std::move(ct)};
}

void check_regular_gate(const CellDatum& d, bool override_gates) {
    if (override_gates) return;
    bool ratfunc = d.field()->tag() == FieldTag::RatFunc;
    int limit = ratfunc ? 24 : 120;
    if (d.dim() > limit)
        throw error("size gate: regular representation dimension " + std::to_string(d.dim()) +
                    " exceeds " + std::to_string(limit) + " over " + d.field()->name() +
                    "; override with --force-gates");
}

CheckReport content_table_checks(const Instance& inst, bool override_gates) {
    const CellDatum& d = *inst.datum;
    const ContentTable& ct = inst.content;
    check_regular_gate(d, override_gates);
    CheckReport report;

    for (int i = 0; i < ct.num_jm(); ++i) {
        const AlgebraElement& L = ct.jm(i);
        report.add("star(L_" + std::to_string(i + 1) + ") = L_" + std::to_string(i + 1),
                   L.star() == L);
    }
    bool commute = true;
    for (int i = 0; i < ct.num_jm() && commute; ++i)
        for (int j = i + 1; j < ct.num_jm() && commute; ++j)
            commute = ct.jm(i) * ct.jm(j) == ct.jm(j) * ct.jm(i);
    report.add("JM elements commute pairwise", commute);

    bool upper = true, diag = true;
    for (int i = 0; i < ct.num_jm(); ++i) {
        Matrix rep = regular_representation(ct.jm(i));
        upper = upper && rep.is_upper_triangular();
        for (int b = 0; b < d.dim(); ++b) {
            BasisKey k = d.basis_key(b);
            int g = d.tableau_global(k.lam, k.t);
            if (!(rep.at(static_cast<size_t>(b), static_cast<size_t>(b)) == ct.content(g, i)))
                diag = false;
        }
    }
    report.add("regular representation of each L_i is upper triangular", upper);
    report.add("diagonal of L_i at column (s,t) equals c_t(i)", diag);
    return report;
}

AlgebraElement hecke_t_basis_element(const CellDatum& d, const Perm& w) {
    const auto* h = dynamic_cast<const HeckeDatum*>(&d);
    if (!h) throw error("not a hecke datum");
    TVec v;
    v.emplace(h->rank_of(w), Scalar::one(d.field()));
    return h->murphy_from_t(v);
}

std::vector<Scalar> hecke_t_product(const CellDatum& d, const Perm& v, const Perm& w) {
    const auto* h = dynamic_cast<const HeckeDatum*>(&d);
    if (!h) throw error("not a hecke datum");
    TVec a, b;
    a.emplace(h->rank_of(v), Scalar::one(d.field()));
    b.emplace(h->rank_of(w), Scalar::one(d.field()));
    TVec prod = h->t_mul(a, b);
    std::vector<Scalar> out(static_cast<size_t>(h->num_perms()), Scalar::zero(d.field()));
    for (const auto& [rank, c] : prod) out[static_cast<size_t>(rank)] = c;
    return out;
}

const std::vector<Partition>& hecke_partitions(const CellDatum& d) {
    const auto* h = dynamic_cast<const HeckeDatum*>(&d);
    if (!h) throw error("not a hecke datum");
    return h->partitions();
}

const std::vector<Tableau>& hecke_tableaux(const CellDatum& d, int lam) {
    const auto* h = dynamic_cast<const HeckeDatum*>(&d);
    if (!h) throw error("not a hecke datum");
    return h->tableaux(lam);
}

}  // namespace semicell
