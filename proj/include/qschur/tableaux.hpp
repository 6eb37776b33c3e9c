#ifndef QSCHUR_TABLEAUX_HPP
#define QSCHUR_TABLEAUX_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qschur/core.hpp"

namespace qschur {

/// One violated tableau condition, anchored at a cell.
struct TableauViolation {
    Cell cell;
    std::string rule;
};

/// Reverse row-strict tableau: partition shape, rows strictly decreasing
/// left to right, columns weakly decreasing top to bottom.
class Rrst {
public:
    Rrst() = default;

    /// Validates and constructs; throws std::invalid_argument on any failure.
    static Rrst from_rows(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int at(int row, int col) const { return rows_[row - 1][col - 1]; }
    std::size_t row_count() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    friend bool operator==(const Rrst&, const Rrst&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Rule violations for a candidate filling (empty result means valid).
/// Throws std::invalid_argument if the row lengths are not a partition
/// shape or an entry is nonpositive.
std::vector<TableauViolation> rrst_violations(const std::vector<std::vector<int>>& rows);

/// Column-superstandard tableau of shape μ: column j constant, filled with
/// μ₁ + 1 − j.
Rrst column_superstandard(const Partition& mu);

/// Bump the largest first-row entry ≤ b, cascade downward; returns the new
/// tableau and the added cell.
std::pair<Rrst, Cell> schensted_insert(const Rrst& tableau, int b);

/// Biword with weakly decreasing upper row; within a constant-upper block
/// the lower row weakly increases.
class TwoLineArray {
public:
    TwoLineArray() = default;
    TwoLineArray(Word upper, Word lower);

    const Word& upper() const { return upper_; }
    const Word& lower() const { return lower_; }
    std::size_t length() const { return upper_.length(); }

    friend bool operator==(const TwoLineArray&, const TwoLineArray&) = default;

private:
    Word upper_;
    Word lower_;
};

struct RskPair {
    Rrst insertion;  // P
    Rrst recording;  // Q
};

/// Insert the lower word into the empty tableau, recording upper entries in
/// the new cells.
RskPair rsk_forward(const TwoLineArray& array);

/// Recover the biword from an insertion/recording pair of common shape.
/// Throws std::invalid_argument when the shapes differ or the recording
/// tableau does not describe a valid insertion history.
TwoLineArray rsk_inverse(const Rrst& insertion, const Rrst& recording);

/// All reverse row-strict tableaux of the given shape with entries in
/// [1, max_entry], in lexicographic column-reading order.
void for_each_rrst(const Partition& shape, int max_entry,
                   const std::function<void(const Rrst&)>& visit);
std::vector<Rrst> enumerate_rrsts(const Partition& shape, int max_entry);

}  // namespace qschur

#endif
