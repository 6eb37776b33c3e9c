#ifndef QSCHUR_SKEW_HPP
#define QSCHUR_SKEW_HPP

#include <functional>
#include <string>
#include <vector>

#include "qschur/core.hpp"

namespace qschur {

/// Entry of a skew filling.  Skewed boxes and the 0th column carry a virtual
/// infinity; two infinities in the same row strictly decrease left to right
/// while two in the same column are equal, so an infinity is ordered by the
/// column it sits in.
class SkewEntry {
public:
    static SkewEntry finite(int value) { return SkewEntry{false, value}; }
    static SkewEntry infinity(int col) { return SkewEntry{true, -col}; }

    bool is_infinite() const { return infinite_; }
    int value() const { return key_; }  // finite entries only

    friend bool operator==(const SkewEntry&, const SkewEntry&) = default;
    friend auto operator<=>(const SkewEntry& a, const SkewEntry& b) {
        if (a.infinite_ != b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.key_ <=> b.key_;
    }

private:
    SkewEntry(bool infinite, int key) : infinite_(infinite), key_(key) {}
    bool infinite_;
    int key_;
};

/// Skew diagram β/γ: γ marks the skewed prefix of each row.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(StrongComposition beta, WeakComposition gamma);

    const StrongComposition& beta() const { return beta_; }
    const WeakComposition& gamma() const { return gamma_; }
    std::size_t row_count() const { return beta_.length(); }
    /// Boxes of β not in γ.
    int cell_count() const { return beta_.size() - gamma_.size(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    StrongComposition beta_;
    WeakComposition gamma_;
};

/// Filling of a skew diagram; rows_[i] lists the entries of the non-skewed
/// boxes of row i+1, left to right.
class SkewFilling {
public:
    SkewFilling() = default;
    SkewFilling(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Entry at (row, col) of the extended diagram, 0 ≤ col ≤ β_row.
    SkewEntry entry(int row, int col) const;

    friend bool operator==(const SkewFilling&, const SkewFilling&) = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

struct Triple {
    enum class Kind { A, B };
    Kind kind;
    // Type A: c = (i₁,j−1), a = (i₁,j), b = (i₂,j)   with β_{i₁} ≥ β_{i₂}, j ≥ 1.
    // Type B: b = (i₁,j),   c = (i₂,j), a = (i₂,j+1) with β_{i₁} < β_{i₂}, j ≥ 0.
    Cell cell_a, cell_b, cell_c;
    SkewEntry a, b, c;
};

/// Every (i₁, i₂, j) combination admitted by the row lengths, in row-pair
/// then column order.
std::vector<Triple> list_triples(const SkewFilling& filling);

/// b ≤ a < c or a < c ≤ b, under the infinity conventions.
bool is_inversion(const Triple& t);

/// Entries in column reading order, skewed boxes and 0th column ignored.
Word column_word(const SkewFilling& filling);

struct SkewViolation {
    std::string rule;
    Cell cell;  // {0,0} for word-level violations
};

/// Littlewood-Richardson conditions: rows strictly decrease, every triple is
/// an inversion triple, and the column word is a regular reverse lattice
/// word (the empty word is accepted).
std::vector<SkewViolation> lr_skew_violations(const SkewFilling& filling);
bool is_lr_skew(const SkewFilling& filling);

/// All LR skew fillings of shape β/γ with strong_of(γ) = α, γ ⊆ β, and
/// content equal to the reverse of λ.  Empty when |β| ≠ |α| + |λ|.
void for_each_lr_skew(const StrongComposition& beta, const StrongComposition& alpha,
                      const Partition& lambda,
                      const std::function<void(const SkewFilling&)>& visit);
std::vector<SkewFilling> enumerate_lr_skew(const StrongComposition& beta,
                                           const StrongComposition& alpha,
                                           const Partition& lambda);

}  // namespace qschur

#endif
