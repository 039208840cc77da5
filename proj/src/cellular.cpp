#include "semicell/cellular.hpp"

#include <sstream>

namespace semicell {

// -------------------------------------------------------- AlgebraElement

AlgebraElement AlgebraElement::basis(const CellDatum* datum, int index) {
    AlgebraElement e(datum);
    e.c_.emplace(index, Scalar::one(datum->field()));
    return e;
}

Scalar AlgebraElement::coeff(int b) const {
    auto it = c_.find(b);
    return it == c_.end() ? Scalar::zero(datum_->field()) : it->second;
}

void AlgebraElement::set_coeff(int b, Scalar value) {
    if (value.is_zero())
        c_.erase(b);
    else
        c_[b] = std::move(value);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [b, v] : o.c_) {
        auto it = r.c_.find(b);
        if (it == r.c_.end()) {
            r.c_.emplace(b, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    if (r.datum_ == nullptr) r.datum_ = o.datum_;
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [b, v] : r.c_) v = -v;
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const Scalar& s) const {
    AlgebraElement r(datum_);
    if (s.is_zero()) return r;
    for (const auto& [b, v] : c_) r.c_.emplace(b, v * s);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    AlgebraElement r(datum_ ? datum_ : o.datum_);
    for (const auto& [bi, vi] : c_)
        for (const auto& [bj, vj] : o.c_) {
            const AlgebraElement& prod = datum_->basis_product(bi, bj);
            Scalar f = vi * vj;
            if (f.is_zero()) continue;
            for (const auto& [br, c] : prod.c_) {
                auto it = r.c_.find(br);
                if (it == r.c_.end()) {
                    r.c_.emplace(br, c * f);
                } else {
                    it->second += c * f;
                    if (it->second.is_zero()) r.c_.erase(it);
                }
            }
        }
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (c_.size() != o.c_.size()) return false;
    auto it = c_.begin(), jt = o.c_.begin();
    for (; it != c_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

AlgebraElement AlgebraElement::star() const {
    AlgebraElement r(datum_);
    for (const auto& [b, v] : c_) {
        BasisKey k = datum_->basis_key(b);
        r.c_.emplace(datum_->basis_index(k.lam, k.t, k.s), v);
    }
    return r;
}

std::string AlgebraElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, v] : c_) {
        if (!first) out << " + ";
        out << "(" << v.to_string() << ")*" << datum_->basis_name(b);
        first = false;
    }
    return out.str();
}

// ------------------------------------------------------------- CellDatum

void CellDatum::init_layout(FieldPtr field, std::vector<std::string> lambda_names,
                            std::vector<std::vector<std::string>> tableau_names) {
    field_ = std::move(field);
    lambda_names_ = std::move(lambda_names);
    tableau_names_ = std::move(tableau_names);
    tab_offset_.assign(1, 0);
    basis_offset_.assign(1, 0);
    for (const auto& tabs : tableau_names_) {
        int k = static_cast<int>(tabs.size());
        tab_offset_.push_back(tab_offset_.back() + k);
        basis_offset_.push_back(basis_offset_.back() + k * k);
    }
}

std::pair<int, int> CellDatum::tableau_from_global(int g) const {
    for (int lam = 0; lam < num_lambdas(); ++lam)
        if (g < tab_offset_[static_cast<size_t>(lam + 1)])
            return {lam, g - tab_offset_[static_cast<size_t>(lam)]};
    throw error("global tableau index out of range");
}

bool CellDatum::global_dominates(int g1, int g2) const {
    auto [l1, t1] = tableau_from_global(g1);
    auto [l2, t2] = tableau_from_global(g2);
    if (l1 == l2) return tableau_dominates(l1, t1, t2);
    return lambda_dominates(l1, l2);
}

BasisKey CellDatum::basis_key(int index) const {
    for (int lam = 0; lam < num_lambdas(); ++lam)
        if (index < basis_offset_[static_cast<size_t>(lam + 1)]) {
            int off = index - basis_offset_[static_cast<size_t>(lam)];
            int k = tableau_count(lam);
            return BasisKey{lam, off / k, off % k};
        }
    throw error("basis index out of range");
}

std::string CellDatum::basis_name(int index) const {
    BasisKey k = basis_key(index);
    return "a[" + lambda_name(k.lam) + ";" + tableau_name(k.lam, k.s) + "," +
           tableau_name(k.lam, k.t) + "]";
}

const AlgebraElement& CellDatum::one() const {
    if (!one_ready_) {
        one_ = compute_one();
        one_ready_ = true;
    }
    return one_;
}

const AlgebraElement& CellDatum::basis_product(int bi, int bj) const {
    long long key = static_cast<long long>(bi) * dim() + bj;
    auto it = product_cache_.find(key);
    if (it == product_cache_.end())
        it = product_cache_.emplace(key, multiply_basis(bi, bj)).first;
    return it->second;
}

// ------------------------------------------------------- free functions

Scalar inner_product_at(const CellDatum& d, int lam, int t, int u, int s, int v) {
    AlgebraElement prod =
        d.basis_product(d.basis_index(lam, s, t), d.basis_index(lam, u, v));
    return prod.coeff(d.basis_index(lam, s, v));
}

Scalar inner_product(const CellDatum& d, int lam, int t, int u) {
    return inner_product_at(d, lam, t, u, 0, 0);
}

Matrix gram_matrix(const CellDatum& d, int lam) {
    int k = d.tableau_count(lam);
    Matrix g(d.field(), static_cast<size_t>(k), static_cast<size_t>(k));
    for (int s = 0; s < k; ++s)
        for (int t = s; t < k; ++t) {
            Scalar v = inner_product(d, lam, s, t);
            g.at(static_cast<size_t>(s), static_cast<size_t>(t)) = v;
            g.at(static_cast<size_t>(t), static_cast<size_t>(s)) = v;
        }
    return g;
}

size_t gram_rank(const CellDatum& d, int lam) { return gram_matrix(d, lam).rank(); }

Matrix module_action(const CellDatum& d, int lam, const AlgebraElement& x) {
    int k = d.tableau_count(lam);
    Matrix act(d.field(), static_cast<size_t>(k), static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) {
        int row_basis = d.basis_index(lam, 0, t);
        for (const auto& [b, coeff] : x.coeffs()) {
            const AlgebraElement& prod = d.basis_product(row_basis, b);
            for (int v = 0; v < k; ++v) {
                Scalar c = prod.coeff(d.basis_index(lam, 0, v));
                if (!c.is_zero())
                    act.at(static_cast<size_t>(t), static_cast<size_t>(v)) += coeff * c;
            }
        }
    }
    return act;
}

Matrix regular_representation(const AlgebraElement& x) {
    const CellDatum& d = *x.datum();
    int n = d.dim();
    Matrix rep(d.field(), static_cast<size_t>(n), static_cast<size_t>(n));
    for (int b = 0; b < n; ++b) {
        for (const auto& [bx, coeff] : x.coeffs()) {
            const AlgebraElement& prod = d.basis_product(b, bx);
            for (const auto& [br, c] : prod.coeffs())
                rep.at(static_cast<size_t>(br), static_cast<size_t>(b)) += coeff * c;
        }
    }
    return rep;
}

// ----------------------------------------------------------- CheckReport

void CheckReport::add(std::string name, bool pass, std::string detail) {
    items.push_back(Item{std::move(name), pass, std::move(detail)});
}

bool CheckReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

std::string CheckReport::to_string() const {
    std::ostringstream out;
    for (const auto& item : items) {
        out << (item.pass ? "pass" : "FAIL") << "  " << item.name;
        if (!item.detail.empty()) out << "  [" << item.detail << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace semicell
