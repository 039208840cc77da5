#include "semicell/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "semicell/field.hpp"  // for error

namespace semicell {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& p) {
    int n = 0;
    for (int part : p) n += part;
    return n;
}

bool partition_dominates(const Partition& a, const Partition& b) {
    if (partition_weight(a) != partition_weight(b)) return false;
    int pa = 0, pb = 0;
    size_t rows = std::max(a.size(), b.size());
    for (size_t i = 0; i < rows; ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa < pb) return false;
    }
    return true;
}

bool partition_dominates_strictly(const Partition& a, const Partition& b) {
    return a != b && partition_dominates(a, b);
}

namespace {
void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw error("partitions_of needs n >= 0");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    // generation order is lexicographic descending, which refines dominance
    for (size_t i = 0; i + 1 < out.size(); ++i)
        assert(!partition_dominates_strictly(out[i + 1], out[i]));
    return out;
}

std::string partition_name(const Partition& p) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ",";
        out << p[i];
    }
    out << ")";
    return out.str();
}

int Tableau::size() const { return partition_weight(shape); }

std::pair<int, int> Tableau::cell_of(int value) const {
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
    throw error("value not in tableau");
}

std::vector<int> Tableau::row_word() const {
    std::vector<int> w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

Partition Tableau::restricted_shape(int k) const {
    Partition p;
    for (const auto& row : rows) {
        int len = 0;
        for (int v : row)
            if (v <= k) ++len;
        if (len) p.push_back(len);
    }
    return p;
}

std::string Tableau::name() const {
    std::ostringstream out;
    out << "[";
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out << "|";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out << ",";
            out << rows[r][c];
        }
    }
    out << "]";
    return out.str();
}

Tableau superstandard_tableau(const Partition& shape) {
    Tableau t;
    t.shape = shape;
    int next = 1;
    for (int len : shape) {
        std::vector<int> row;
        for (int c = 0; c < len; ++c) row.push_back(next++);
        t.rows.push_back(std::move(row));
    }
    return t;
}

bool tableau_dominates_strictly(const Tableau& s, const Tableau& t) {
    if (s.shape != t.shape) throw error("tableau dominance needs equal shapes");
    if (s.rows == t.rows) return false;
    int n = s.size();
    for (int k = 1; k <= n; ++k)
        if (!partition_dominates(s.restricted_shape(k), t.restricted_shape(k))) return false;
    return true;
}

namespace {
void gen_tableaux(const Partition& shape, int value, int n,
                  std::vector<std::vector<int>>& rows, std::vector<int>& filled,
                  std::vector<Tableau>& out) {
    if (value > n) {
        Tableau t;
        t.shape = shape;
        t.rows = rows;
        out.push_back(std::move(t));
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        int c = filled[r];
        if (c >= shape[r]) continue;
        if (r > 0 && filled[r - 1] <= c) continue;  // column condition
        rows[r][static_cast<size_t>(c)] = value;
        ++filled[r];
        gen_tableaux(shape, value + 1, n, rows, filled, out);
        --filled[r];
    }
}
}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    if (!is_partition(shape)) throw error("not a partition: " + partition_name(shape));
    int n = partition_weight(shape);
    std::vector<std::vector<int>> rows;
    for (int len : shape) rows.emplace_back(static_cast<size_t>(len), 0);
    std::vector<int> filled(shape.size(), 0);
    std::vector<Tableau> out;
    gen_tableaux(shape, 1, n, rows, filled, out);

    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return a.row_word() < b.row_word(); });
    // Kahn pass: emit, among tableaux all of whose strict dominators are
    // already emitted, the lexicographically smallest. Deterministic total
    // order refining dominance, superstandard first.
    std::vector<Tableau> ordered;
    std::vector<bool> used(out.size(), false);
    while (ordered.size() < out.size()) {
        for (size_t i = 0; i < out.size(); ++i) {
            if (used[i]) continue;
            bool ready = true;
            for (size_t j = 0; j < out.size() && ready; ++j)
                if (!used[j] && j != i && tableau_dominates_strictly(out[j], out[i])) ready = false;
            if (ready) {
                ordered.push_back(out[i]);
                used[i] = true;
                break;
            }
        }
    }
    return ordered;
}

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p.img[static_cast<size_t>(i)] = i;
    return p;
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.img[static_cast<size_t>(a)], p.img[static_cast<size_t>(b)]);
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i)
        r.img[i] = o.img[static_cast<size_t>(img[i])];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[static_cast<size_t>(img[i])] = static_cast<int>(i);
    return r;
}

int Perm::length() const {
    int inv = 0;
    for (size_t i = 0; i < img.size(); ++i)
        for (size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
    return inv;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<int> Perm::reduced_word() const {
    // peel descents from the left: w = s_{i1} * s_{i2} * ... * s_{ik}
    std::vector<int> word;
    Perm w = *this;
    for (;;) {
        int descent = -1;
        for (int i = 0; i + 1 < size(); ++i)
            if (w.img[static_cast<size_t>(i)] > w.img[static_cast<size_t>(i + 1)]) {
                descent = i;
                break;
            }
        if (descent < 0) break;
        word.push_back(descent);
        std::swap(w.img[static_cast<size_t>(descent)], w.img[static_cast<size_t>(descent + 1)]);
    }
    return word;
}

std::string Perm::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) out << " ";
        out << img[i] + 1;
    }
    out << "]";
    return out.str();
}

Perm tableau_permutation(const Tableau& t) {
    Tableau super = superstandard_tableau(t.shape);
    int n = t.size();
    Perm d = Perm::identity(n);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c)
            d.img[static_cast<size_t>(super.rows[r][c] - 1)] = t.rows[r][c] - 1;
    return d;
}

}  // namespace semicell
