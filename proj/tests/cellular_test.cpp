#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semicell/instances.hpp"

using namespace semicell;

namespace {
Scalar q_of(long n, long d = 1) { return Scalar::rational(Rat(n, d)); }
}

TEST_CASE("partitions in dominance-compatible order") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK(p4[4] == Partition{1, 1, 1, 1});
    for (size_t i = 0; i < p4.size(); ++i)
        for (size_t j = i + 1; j < p4.size(); ++j)
            CHECK(!partition_dominates_strictly(p4[j], p4[i]));
    CHECK(partition_dominates_strictly({3, 1}, {2, 2}));
    CHECK(!partition_dominates_strictly({3, 1, 1, 1}, {2, 2, 2}));
    CHECK(!partition_dominates_strictly({2, 2, 2}, {3, 1, 1, 1}));
    CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("standard tableaux enumeration and order") {
    CHECK(standard_tableaux({5}).size() == 1);
    CHECK(standard_tableaux({2, 1}).size() == 2);
    CHECK(standard_tableaux({2, 2}).size() == 2);
    CHECK(standard_tableaux({3, 2}).size() == 5);
    CHECK(standard_tableaux({3, 2, 1}).size() == 16);

    // most dominant (superstandard) first, and the order refines dominance
    for (const Partition& shape : std::vector<Partition>{{2, 1}, {3, 2}, {2, 2, 1}, {4, 2}}) {
        auto tabs = standard_tableaux(shape);
        CHECK(tabs[0].rows == superstandard_tableau(shape).rows);
        for (size_t i = 0; i < tabs.size(); ++i)
            for (size_t j = i + 1; j < tabs.size(); ++j)
                CHECK(!tableau_dominates_strictly(tabs[j], tabs[i]));
    }

    // spec example: rows {1,2},{3} dominates rows {1,3},{2}
    auto t21 = standard_tableaux({2, 1});
    CHECK(t21[0].rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(t21[1].rows == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(tableau_dominates_strictly(t21[0], t21[1]));
}

TEST_CASE("permutations") {
    Perm id = Perm::identity(4);
    CHECK(id.length() == 0);
    Perm s0 = Perm::transposition(4, 0, 1);
    Perm s1 = Perm::transposition(4, 1, 2);
    CHECK((s0 * s1).length() == 2);
    CHECK((s0 * s0).is_identity());
    Perm w = s0 * s1 * Perm::transposition(4, 2, 3);
    CHECK(w.inverse() * w == id);
    auto word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    Perm rebuilt = Perm::identity(4);
    for (int i : word) rebuilt = rebuilt * Perm::transposition(4, i, i + 1);
    CHECK(rebuilt == w);

    // d(t^lambda) = id; d maps superstandard entries to t entries
    auto tabs = standard_tableaux({2, 1});
    CHECK(tableau_permutation(tabs[0]).is_identity());
    Perm d = tableau_permutation(tabs[1]);
    CHECK(d.of(1) == 2);  // value 2 in t^lambda goes to value 3
    CHECK(d.of(2) == 1);
}

TEST_CASE("toy algebra structure") {
    // contents (0, 1): x(x-1) = 0, a_2 x = a_2
    auto inst = build_toy({q_of(0), q_of(1)});
    const CellDatum& d = *inst.datum;
    CHECK(d.dim() == 2);
    const AlgebraElement& x = inst.content.jm(0);
    // a_2 is the basis element of the most dominant lambda (index 0)
    AlgebraElement a2 = AlgebraElement::basis(&d, d.basis_index(0, 0, 0));
    AlgebraElement a1 = AlgebraElement::basis(&d, d.basis_index(1, 0, 0));
    CHECK(a2 * x == a2);
    CHECK(a1 * x == a2);
    CHECK(d.one() == a1);

    // regular representation in storage order (a_2, a_1): upper triangular,
    // diagonal carries the contents (1, 0)
    Matrix rep = regular_representation(x);
    CHECK(rep.is_upper_triangular());
    CHECK(rep.at(0, 0) == q_of(1));
    CHECK(rep.at(1, 1) == q_of(0));
    CHECK(rep.at(0, 1) == q_of(1));

    // single content: one-dimensional algebra with x = c
    auto single = build_toy({q_of(7)});
    CHECK(single.datum->dim() == 1);
    CHECK(single.content.jm(0) == single.datum->one() * q_of(7));

    // inner products: <a_2, a_2> = 1 for contents (0,1)
    CHECK(inner_product(d, 0, 0, 0) == q_of(1));
    CHECK(gram_matrix(d, 1).at(0, 0) == q_of(1));

    CheckReport rep_checks = content_table_checks(inst);
    CHECK(rep_checks.all_pass());
}

TEST_CASE("matrix algebra structure") {
    auto inst = build_matrix_algebra(3);
    const CellDatum& d = *inst.datum;
    CHECK(d.dim() == 9);
    // e_12 * e_23 = e_13
    AlgebraElement e12 = AlgebraElement::basis(&d, d.basis_index(0, 0, 1));
    AlgebraElement e23 = AlgebraElement::basis(&d, d.basis_index(0, 1, 2));
    AlgebraElement e13 = AlgebraElement::basis(&d, d.basis_index(0, 0, 2));
    CHECK(e12 * e23 == e13);
    CHECK((e23 * e12).is_zero());
    CHECK(e12.star() == AlgebraElement::basis(&d, d.basis_index(0, 1, 0)));

    // Gram matrix is the identity
    CHECK(gram_matrix(d, 0) == Matrix::identity(d.field(), 3));
    CHECK(gram_rank(d, 0) == 3);

    // contents of tableau i are the delta vector
    auto n2 = build_matrix_algebra(2);
    CHECK(n2.content.content_vector(0) == std::vector<Scalar>{q_of(1), q_of(0)});
    CHECK(n2.content.content_vector(1) == std::vector<Scalar>{q_of(0), q_of(1)});

    CHECK(content_table_checks(inst).all_pass());

    // n = 1: trivial algebra, L_1 = 1
    auto n1 = build_matrix_algebra(1);
    CHECK(n1.content.jm(0) == n1.datum->one());
}

TEST_CASE("bilinear form properties across instances") {
    std::mt19937_64 rng(3);
    auto toy = build_toy({q_of(0), q_of(1), q_of(3)});
    auto mat = build_matrix_algebra(3);
    auto Qq = Field::rational_functions(Field::rationals(), "q");
    auto hecke = build_hecke(3, Qq, Scalar::variable(Qq));

    for (const Instance* inst : {&toy, &mat, &hecke}) {
        const CellDatum& d = *inst->datum;
        for (int lam = 0; lam < d.num_lambdas(); ++lam) {
            int k = d.tableau_count(lam);
            for (int t = 0; t < k; ++t)
                for (int u = 0; u < k; ++u) {
                    // symmetry
                    CHECK(inner_product(d, lam, t, u) == inner_product(d, lam, u, t));
                    // independence of the witness pair
                    std::uniform_int_distribution<int> pick(0, k - 1);
                    int s = pick(rng), v = pick(rng);
                    CHECK(inner_product_at(d, lam, t, u, s, v) == inner_product(d, lam, t, u));
                }
        }
        // star is an anti-isomorphism of order two on random elements
        std::uniform_int_distribution<int> pickb(0, d.dim() - 1);
        for (int trial = 0; trial < 6; ++trial) {
            AlgebraElement a = AlgebraElement::basis(&d, pickb(rng));
            AlgebraElement b = AlgebraElement::basis(&d, pickb(rng));
            CHECK(a.star().star() == a);
            CHECK((a * b).star() == b.star() * a.star());
        }
    }
}

TEST_CASE("products respect the cell filtration") {
    // a_st * x lies in span{a_sv : v} + span{a^mu : mu > lambda}
    std::mt19937_64 rng(41);
    auto Qq = Field::rational_functions(Field::rationals(), "q");
    auto hecke = build_hecke(3, Qq, Scalar::variable(Qq));
    auto toy = build_toy({q_of(0), q_of(1), q_of(3)});
    auto mat = build_matrix_algebra(3);
    for (const Instance* inst : {&hecke, &toy, &mat}) {
        const CellDatum& d = *inst->datum;
        std::uniform_int_distribution<int> pickb(0, d.dim() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            int b1 = pickb(rng), b2 = pickb(rng);
            BasisKey key = d.basis_key(b1);
            const AlgebraElement& prod = d.basis_product(b1, b2);
            for (const auto& [r, c] : prod.coeffs()) {
                (void)c;
                BasisKey rk = d.basis_key(r);
                bool same_cell_row = rk.lam == key.lam && rk.s == key.s;
                bool higher_cell = d.lambda_dominates(rk.lam, key.lam);
                CHECK((same_cell_row || higher_cell));
            }
        }
    }
}

TEST_CASE("form associativity: <a x, b> = <a, b x*>") {
    std::mt19937_64 rng(29);
    auto Qq = Field::rational_functions(Field::rationals(), "q");
    auto hecke = build_hecke(3, Qq, Scalar::variable(Qq));
    auto toy = build_toy({q_of(0), q_of(1), q_of(3)});
    for (const Instance* inst : {&hecke, &toy}) {
        const CellDatum& d = *inst->datum;
        std::uniform_int_distribution<int> pickb(0, d.dim() - 1);
        std::uniform_int_distribution<long> picks(-3, 3);
        for (int lam = 0; lam < d.num_lambdas(); ++lam) {
            int k = d.tableau_count(lam);
            Matrix gram = gram_matrix(d, lam);
            for (int trial = 0; trial < 4; ++trial) {
                // random module vectors and a random algebra element
                std::vector<Scalar> a(static_cast<size_t>(k)), b(static_cast<size_t>(k));
                for (int i = 0; i < k; ++i) {
                    a[static_cast<size_t>(i)] = Scalar::from_int(picks(rng), d.field());
                    b[static_cast<size_t>(i)] = Scalar::from_int(picks(rng), d.field());
                }
                AlgebraElement x = AlgebraElement::basis(&d, pickb(rng)) +
                                   AlgebraElement::basis(&d, pickb(rng)) *
                                       Scalar::from_int(2, d.field());
                Matrix act_x = module_action(d, lam, x);
                Matrix act_xstar = module_action(d, lam, x.star());
                auto form = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
                    Scalar acc = Scalar::zero(d.field());
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j)
                            acc += u[static_cast<size_t>(i)] *
                                   gram.at(static_cast<size_t>(i), static_cast<size_t>(j)) *
                                   v[static_cast<size_t>(j)];
                    return acc;
                };
                auto apply = [&](const std::vector<Scalar>& u, const Matrix& m) {
                    std::vector<Scalar> out(static_cast<size_t>(k), Scalar::zero(d.field()));
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j)
                            out[static_cast<size_t>(j)] += u[static_cast<size_t>(i)] *
                                                           m.at(static_cast<size_t>(i), static_cast<size_t>(j));
                    return out;
                };
                CHECK(form(apply(a, act_x), b) == form(a, apply(b, act_xstar)));
            }
        }
    }
}

TEST_CASE("module action is a homomorphism") {
    auto Qq = Field::rational_functions(Field::rationals(), "q");
    auto hecke = build_hecke(3, Qq, Scalar::variable(Qq));
    const CellDatum& d = *hecke.datum;
    const AlgebraElement& L2 = hecke.content.jm(1);
    const AlgebraElement& L3 = hecke.content.jm(2);
    for (int lam = 0; lam < d.num_lambdas(); ++lam) {
        CHECK(module_action(d, lam, L2) * module_action(d, lam, L3) ==
              module_action(d, lam, L2 * L3));
        CHECK(module_action(d, lam, d.one()) ==
              Matrix::identity(d.field(), static_cast<size_t>(d.tableau_count(lam))));
    }
}
