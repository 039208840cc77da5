#ifndef SEMICELL_SEMINORMAL_HPP
#define SEMICELL_SEMINORMAL_HPP

#include "semicell/instances.hpp"

namespace semicell {

struct SeparationResult {
    bool separated = false;
    // on failure: a dominance-comparable pair with equal content vectors
    int witness_dominant = -1;
    int witness_dominated = -1;
};

/// Do the contents distinguish every dominance-comparable pair of
/// tableaux in T(Lambda)?
SeparationResult check_separation(const ContentTable& ct);

/// The content value sets C(i), deduplicated in order of first appearance
/// along the global tableau order.
std::vector<std::vector<Scalar>> content_value_sets(const ContentTable& ct);

/// F_t as an operator on the cell module C(lambda): the product over all
/// i and all c in C(i) other than c_t(i) of (L_i - c)/(c_t(i) - c).
Matrix ft_module_action(const ContentTable& ct, int lam, int t);

/// F_t as an element of the algebra. Walks the regular representation
/// scale, so the size gate applies.
AlgebraElement ft_algebra_element(const ContentTable& ct, int global_t,
                                  bool override_gates = false);

struct SeminormalData {
    int lam = -1;
    /// column t holds f_t expanded in the a-basis; upper unitriangular
    Matrix transition;
    std::vector<Scalar> gammas;      // gamma_t = <f_t, f_t>
    std::vector<Matrix> ft_actions;  // action of F_t on C(lambda)
};

/// Seminormal basis of C(lambda): f_t = a_t * F_t, the gamma scalars and
/// the F_t actions. Verifies orthogonality, <a_t, f_t> = gamma_t, and
/// that every gamma is nonzero.
SeminormalData seminormal_data(const ContentTable& ct, int lam);

/// prod_t gamma_t; checked against det(gram_matrix(lambda)) before
/// returning.
Scalar gram_determinant(const ContentTable& ct, int lam);

/// Algebra-level idempotent identities: F_t^2 = F_t, F_s F_t = 0,
/// sum F_t = 1, F_lambda central, F_t = gamma_t^{-1} f_tt.
CheckReport idempotent_suite(const ContentTable& ct, bool override_gates = false);

/// L_i = sum_t c_t(i) F_t and the minimum polynomial of L_i acting on the
/// algebra is prod_{c in C(i)} (X - c).
CheckReport spectral_identities(const ContentTable& ct, bool override_gates = false);

/// span{F_t} has dimension |T(Lambda)| and equals the centralizer of the
/// JM elements in the algebra.
CheckReport maximal_abelian_check(const ContentTable& ct, bool override_gates = false);

}  // namespace semicell

#endif
