#ifndef SEMICELL_TABLEAUX_HPP
#define SEMICELL_TABLEAUX_HPP

#include <string>
#include <vector>

namespace semicell {

using Partition = std::vector<int>;  // weakly decreasing positive parts

bool is_partition(const Partition& p);
int partition_weight(const Partition& p);

/// Strict dominance on partitions of the same integer.
bool partition_dominates(const Partition& a, const Partition& b);  // a >= b
bool partition_dominates_strictly(const Partition& a, const Partition& b);

/// All partitions of n, most dominant first (linear extension of dominance).
std::vector<Partition> partitions_of(int n);

std::string partition_name(const Partition& p);  // "(2,1)"

/// Standard Young tableau: rows increase left to right, columns top to
/// bottom, entries are 1..n.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int size() const;
    std::pair<int, int> cell_of(int value) const;  // (row, col), 0-based
    std::vector<int> row_word() const;             // rows concatenated
    Partition restricted_shape(int k) const;       // shape of entries <= k
    std::string name() const;                      // "[1,2|3]"
};

/// t^lambda: 1..n filled along rows.
Tableau superstandard_tableau(const Partition& shape);

/// All standard tableaux of the given shape, in a fixed total order that
/// refines dominance with the most dominant (the superstandard tableau)
/// first.
std::vector<Tableau> standard_tableaux(const Partition& shape);

/// Strict dominance: every restriction of s dominates that of t.
bool tableau_dominates_strictly(const Tableau& s, const Tableau& t);

/// Permutation of {0..n-1} in one-line notation; img[i] is the image of i.
/// Products compose left to right: (a*b).of(i) = b.of(a.of(i)).
struct Perm {
    std::vector<int> img;

    static Perm identity(int n);
    static Perm transposition(int n, int a, int b);  // (a b), 0-based

    int size() const { return static_cast<int>(img.size()); }
    int of(int i) const { return img[i]; }
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img == o.img; }
    int length() const;  // inversion count
    bool is_identity() const;

    /// Indices i with w = s_{i_1} * ... * s_{i_k} reduced (s_i swaps i, i+1).
    std::vector<int> reduced_word() const;

    std::string to_string() const;
};

/// The permutation d with t = superstandard(shape) * d, acting on values.
Perm tableau_permutation(const Tableau& t);

}  // namespace semicell

#endif
