#ifndef SEMICELL_CELLULAR_HPP
#define SEMICELL_CELLULAR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "semicell/field.hpp"
#include "semicell/matrix.hpp"

namespace semicell {

class CellDatum;

/// Element of a cellular algebra, stored as a sparse coefficient map over
/// the cellular basis. Zero coefficients are never kept.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const CellDatum* datum) : datum_(datum) {}
    static AlgebraElement basis(const CellDatum* datum, int index);

    const CellDatum* datum() const { return datum_; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int basis_index) const;
    const std::map<int, Scalar>& coeffs() const { return c_; }
    void set_coeff(int basis_index, Scalar value);

    AlgebraElement operator+(const AlgebraElement&) const;
    AlgebraElement operator-(const AlgebraElement&) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement&) const;  // via the datum's oracle
    AlgebraElement operator*(const Scalar&) const;
    bool operator==(const AlgebraElement&) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement star() const;  // (lambda,s,t) -> (lambda,t,s)

    std::string to_string() const;

private:
    const CellDatum* datum_ = nullptr;
    std::map<int, Scalar> c_;
};

struct BasisKey {
    int lam;  // index into the datum's lambda list
    int s;    // indices into T(lambda)
    int t;
};

/// A cell datum: poset of lambdas, ordered tableau sets, a basis-product
/// oracle and the * involution. Lambdas are listed along a fixed linear
/// extension of dominance with more dominant lambdas first, and each
/// T(lambda) is listed with more dominant tableaux first. Basis elements
/// are ordered by (lambda, s, t) lexicographically in those lists, which
/// makes each A^lambda an upper-left block.
class CellDatum {
public:
    virtual ~CellDatum() = default;

    const FieldPtr& field() const { return field_; }
    int num_lambdas() const { return static_cast<int>(tableau_names_.size()); }
    const std::string& lambda_name(int lam) const { return lambda_names_[static_cast<size_t>(lam)]; }
    int tableau_count(int lam) const { return static_cast<int>(tableau_names_[static_cast<size_t>(lam)].size()); }
    const std::string& tableau_name(int lam, int t) const {
        return tableau_names_[static_cast<size_t>(lam)][static_cast<size_t>(t)];
    }

    /// strict order relations
    virtual bool lambda_dominates(int a, int b) const = 0;             // lambda_a > lambda_b
    virtual bool tableau_dominates(int lam, int i, int j) const = 0;   // within T(lambda)

    // global tableau indexing over T(Lambda)
    int num_tableaux() const { return static_cast<int>(tab_offset_.back()); }
    int tableau_global(int lam, int t) const { return tab_offset_[static_cast<size_t>(lam)] + t; }
    std::pair<int, int> tableau_from_global(int g) const;
    /// dominance on T(Lambda): same lambda and dominant there, or a more
    /// dominant lambda
    bool global_dominates(int g1, int g2) const;

    // basis indexing
    int dim() const { return static_cast<int>(basis_offset_.back()); }
    int basis_index(int lam, int s, int t) const {
        return basis_offset_[static_cast<size_t>(lam)] + s * tableau_count(lam) + t;
    }
    BasisKey basis_key(int index) const;
    std::string basis_name(int index) const;

    const AlgebraElement& one() const;
    const AlgebraElement& basis_product(int bi, int bj) const;

protected:
    void init_layout(FieldPtr field, std::vector<std::string> lambda_names,
                     std::vector<std::vector<std::string>> tableau_names);

    virtual AlgebraElement multiply_basis(int bi, int bj) const = 0;
    virtual AlgebraElement compute_one() const = 0;

private:
    FieldPtr field_;
    std::vector<std::string> lambda_names_;
    std::vector<std::vector<std::string>> tableau_names_;
    std::vector<int> tab_offset_;
    std::vector<int> basis_offset_;
    mutable std::map<long long, AlgebraElement> product_cache_;
    mutable AlgebraElement one_;
    mutable bool one_ready_ = false;
};

/// <a_t, a_u>_lambda via the structure constants, computed with the
/// witness pair (s, v); the defining property makes the result independent
/// of that choice.
Scalar inner_product_at(const CellDatum& d, int lam, int t, int u, int s, int v);
Scalar inner_product(const CellDatum& d, int lam, int t, int u);

Matrix gram_matrix(const CellDatum& d, int lam);
size_t gram_rank(const CellDatum& d, int lam);

/// Action of x on the cell module C(lambda): row t holds the expansion of
/// a_t * x in the a-basis, so action(x*y) = action(x) * action(y).
Matrix module_action(const CellDatum& d, int lam, const AlgebraElement& x);

/// Right multiplication by x on the full cellular basis; column b holds
/// the expansion of a_b * x. JM elements give upper triangular matrices
/// with the contents on the diagonal.
Matrix regular_representation(const AlgebraElement& x);

/// Pass/fail report shared by the verification suites.
struct CheckReport {
    struct Item {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;

    void add(std::string name, bool pass, std::string detail = "");
    bool all_pass() const;
    std::string to_string() const;
};

}  // namespace semicell

#endif
