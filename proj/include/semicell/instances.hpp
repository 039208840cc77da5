#ifndef SEMICELL_INSTANCES_HPP
#define SEMICELL_INSTANCES_HPP

#include <functional>
#include <memory>
#include <optional>

#include "semicell/cellular.hpp"
#include "semicell/tableaux.hpp"

namespace semicell {

/// Contents c_t(i) of the JM elements L_1..L_M, indexed by global tableau
/// and by i (0-based). The elements themselves are built on demand; for
/// the Hecke algebra that avoids paying for the T-basis transition when
/// only contents are needed.
class ContentTable {
public:
    ContentTable() = default;
    ContentTable(const CellDatum* datum, int num_jm,
                 std::vector<std::vector<Scalar>> contents,
                 std::function<AlgebraElement(int)> jm_builder);

    const CellDatum* datum() const { return datum_; }
    int num_jm() const { return num_jm_; }
    const Scalar& content(int global_tableau, int i) const {
        return contents_[static_cast<size_t>(global_tableau)][static_cast<size_t>(i)];
    }
    const std::vector<Scalar>& content_vector(int global_tableau) const {
        return contents_[static_cast<size_t>(global_tableau)];
    }
    const AlgebraElement& jm(int i) const;

private:
    const CellDatum* datum_ = nullptr;
    int num_jm_ = 0;
    std::vector<std::vector<Scalar>> contents_;
    std::function<AlgebraElement(int)> jm_builder_;
    mutable std::vector<std::optional<AlgebraElement>> jm_cache_;
};

struct Instance {
    std::shared_ptr<CellDatum> datum;
    ContentTable content;
};

/// R[X]/(X-c_1)...(X-c_n) with basis a_i = prod_{j<i}(x - c_j) and the
/// single JM element x.
Instance build_toy(const std::vector<Scalar>& contents);

/// Full matrix algebra with basis e_ij and JM elements L_i = e_ii.
Instance build_matrix_algebra(int n, const FieldPtr& field = Field::rationals());

/// Hecke algebra of type A on n strands with the Murphy cellular basis
/// and JM elements L_1 = 0, L_i = sum_{j<i} q^{j-i} T_{(i,j)}.
Instance build_hecke(int n, const FieldPtr& field, const Scalar& q,
                     bool override_gates = false);

/// Desk-scale guard for computations that walk the regular representation.
/// Throws (naming the override) when the dimension is out of range:
/// 24 over rational function fields, 120 otherwise.
void check_regular_gate(const CellDatum& d, bool override_gates = false);

/// Largest n accepted by build_hecke without an override.
constexpr int kHeckeModuleGate = 6;

/// Verifies the JM axioms for an instance: star-invariance, pairwise
/// commutation, and upper triangular regular representations with the
/// contents on the diagonal. Walks the regular representation, so the
/// size gate applies.
CheckReport content_table_checks(const Instance& inst, bool override_gates = false);

/// Access to the Hecke T-basis for tests and cross-checks: the element
/// T_w expressed in the Murphy basis.
AlgebraElement hecke_t_basis_element(const CellDatum& hecke_datum, const Perm& w);

/// Product T_v * T_w expanded in the T-basis, as a dense coefficient
/// vector indexed by lexicographic permutation rank.
std::vector<Scalar> hecke_t_product(const CellDatum& hecke_datum, const Perm& v, const Perm& w);

/// The partition and tableau list backing a Hecke instance.
const std::vector<Partition>& hecke_partitions(const CellDatum& hecke_datum);
const std::vector<Tableau>& hecke_tableaux(const CellDatum& hecke_datum, int lam);

}  // namespace semicell

#endif
