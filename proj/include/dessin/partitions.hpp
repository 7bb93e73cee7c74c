#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dessin/rational.hpp"

namespace dessin {

// Integer partition: weakly decreasing sequence of positive integers.
// Value type with structural equality and a total order (by size, then
// reverse-lexicographic) so it can serve as a map key everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text form: comma-separated parts, "[]" for the empty partition.
    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }          // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {                     // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    // multiplicity of the value v among the parts
    int multiplicity(int v) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.parts_ > b.parts_;  // reverse-lex within a fixed size
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Box of a Young diagram, 1-based row/column to match the usual conventions.
struct Box {
    int row = 0;
    int col = 0;
    friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
};

Partition transpose(const Partition& la);

// (m_1..m_k | n_1..n_k) with m_i = la_i - i, n_i = la^t_i - i up to the diagonal.
std::pair<std::vector<int>, std::vector<int>> frobenius(const Partition& la);

bool contains_box(const Partition& la, Box b);
int hook_length(const Partition& la, Box b);
int content(const Partition& la, Box b);

// z_lambda = prod_i i^{m_i} m_i!  (centralizer order of the cycle type)
Int z_factor(const Partition& la);

// |lambda|! / prod of hook lengths = number of standard Young tableaux
Int dim_irrep(const Partition& la);

std::vector<Box> addable_boxes(const Partition& la);
std::vector<Box> removable_boxes(const Partition& la);

// All partitions of d in reverse-lexicographic order ((d) first, (1^d) last);
// the second form keeps only those of the given length.
std::vector<Partition> partitions_of(int d);
std::vector<Partition> partitions_of(int d, int length);

// [a]_k = a(a-1)...(a-k+1), with [a]_0 = 1.
Int falling_factorial(long a, long k);

}  // namespace dessin
