#ifndef QSCHUR_CORE_HPP
#define QSCHUR_CORE_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace qschur {

/// Sequence of positive integers (a₁,…,a_k).  Indexes tableau shapes.
class StrongComposition {
public:
    StrongComposition() = default;
    explicit StrongComposition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const StrongComposition&, const StrongComposition&) = default;
    friend auto operator<=>(const StrongComposition& a, const StrongComposition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Sequence of nonnegative integers.  Used for contents and skew inner shapes.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition& a, const WeakComposition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Box coordinates, 1-based rows.  Column 0 only appears in skew contexts.
struct Cell {
    int row = 1;
    int col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Finite sequence of positive integers.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int letter(std::size_t i) const { return letters_[i]; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// Parts of α sorted weakly decreasing.
Partition partition_of(const StrongComposition& alpha);

/// Positive parts of γ, order preserved.
StrongComposition strong_of(const WeakComposition& gamma);

/// (λ_k,…,λ_1).
WeakComposition reverse_partition(const Partition& lambda);

/// Conjugate shape: λᵗ_j = #{i : λ_i ≥ j}.
Partition transpose(const Partition& lambda);

/// γ_i ≤ β_i for all i.  Requires equal explicit lengths; see pad_to.
bool contains(const WeakComposition& gamma, const WeakComposition& beta);

/// γ extended with trailing zeros to length k.
WeakComposition pad_to(const WeakComposition& gamma, std::size_t k);

WeakComposition as_weak(const StrongComposition& alpha);
WeakComposition as_weak(const Partition& lambda);

/// Occurrence counts (c₁,…,c_m), m the largest letter.
WeakComposition content(const Word& w);

/// Every prefix has at least as many i's as (i−1)'s, for each 1 < i ≤ m.
bool is_reverse_lattice(const Word& w);

/// Reverse lattice and at least one 1 occurs.
bool is_regular_reverse_lattice(const Word& w);

/// Column reading order: bottom to top in each column, columns left to right.
bool col_order_less(const Cell& a, const Cell& b);

// Elementary Knuth transformations on three consecutive letters at pos.
// K1: bca → bac  (a < b ≤ c);  K2: acb → cab  (a ≤ b < c).
Word knuth_k1(const Word& w, std::size_t pos);
Word knuth_k1_inv(const Word& w, std::size_t pos);
Word knuth_k2(const Word& w, std::size_t pos);
Word knuth_k2_inv(const Word& w, std::size_t pos);

}  // namespace qschur

#endif
