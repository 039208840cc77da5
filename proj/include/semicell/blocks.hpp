#ifndef SEMICELL_BLOCKS_HPP
#define SEMICELL_BLOCKS_HPP

#include "semicell/seminormal.hpp"

namespace semicell {

/// A cellular algebra over the DVR R inside K = k(t), together with its
/// reduction mod (t - q). The K-side instance carries the separating JM
/// family; the k-side instance is the algebra whose blocks are described.
struct ModularInstance {
    DvrContext ctx;
    Instance over_K;
    Instance over_k;
};

/// Hecke algebra with parameter q in k, lifted to parameter t over k(t).
ModularInstance lift_hecke(int n, const FieldPtr& k, const Scalar& q,
                           bool override_gates = false);

/// Toy algebra with contents given over the ambient field K; the reduction
/// takes contents mod (t - q).
ModularInstance lift_toy(const std::vector<Scalar>& contents_over_K, const DvrContext& ctx);

struct ResidueClass {
    std::vector<Scalar> residues;  // over k, indexed by JM element
    std::vector<int> members;      // global tableau indices
};

/// Partition of T(Lambda) by residue vectors. Also verifies that the
/// contents lie in R and that c - c' is invertible in R whenever the
/// residues differ; violations raise an error naming the pair.
std::vector<ResidueClass> residue_classes(const ModularInstance& mi);

/// Connected components of "lambda and mu share a residue class".
std::vector<std::vector<int>> linkage_classes(const ModularInstance& mi,
                                              const std::vector<ResidueClass>& classes);

/// G_T: the sum of F_t over the class, verified integral (every coordinate
/// has valuation >= 0) and reduced mod (t - q). Verified idempotent and
/// star-invariant over k.
AlgebraElement class_idempotent(const ModularInstance& mi, const ResidueClass& cls,
                                bool override_gates = false);

struct BlockBasis {
    std::vector<int> lambdas;          // the linkage class
    std::vector<int> basis_indices;    // positions of its g_st in the full basis
    std::vector<AlgebraElement> g;     // over k, aligned with basis_indices
    AlgebraElement g_gamma;            // central idempotent of the block
    int dimension() const { return static_cast<int>(basis_indices.size()); }
};

/// Everything the block machinery derives from one modular instance.
struct BlocksData {
    std::vector<ResidueClass> classes;
    std::vector<int> tableau_class;          // global tableau -> class index
    std::vector<std::vector<int>> linkage;   // partition of the lambda indices
    std::vector<AlgebraElement> class_idem;  // G_T per residue class
    std::vector<AlgebraElement> g;           // g_b for every basis index, over k
    Matrix g_to_a;                           // column b = g_b in the a-basis
    Matrix a_to_g;
};

BlocksData compute_blocks(const ModularInstance& mi, bool override_gates = false);

/// The g-basis of one linkage class, with closure and vanishing checks.
BlockBasis g_basis(const ModularInstance& mi, const BlocksData& data,
                   const std::vector<int>& gamma);

/// Full verification suite over A_k: orthogonal idempotent decompositions,
/// centrality, minimum polynomials, the g-basis of each cell module, and
/// centrality of the power sums of the JM family.
CheckReport block_report(const ModularInstance& mi, bool override_gates = false);

/// Residue-multiset block criterion for the Hecke algebra: do lambda and
/// mu have equal multisets of node residues over k?
bool hecke_block_predicate(const Partition& lambda, const Partition& mu, const Scalar& q);

}  // namespace semicell

#endif
