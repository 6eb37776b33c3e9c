#ifndef QSCHUR_RCT_HPP
#define QSCHUR_RCT_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qschur/core.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

/// Row-strict composition tableau.  The filling of a strong-composition
/// diagram satisfies:
///   (1) the first column weakly increases top to bottom,
///   (2) rows strictly decrease left to right,
///   (3) triple rule: after padding rows with zeros to a k×m rectangle,
///       for rows i₁ < i₂ and columns 2 ≤ j ≤ m, an entry b at (i₂,j) with
///       b ≠ 0 and b > a at (i₁,j) forces b ≥ c at (i₁,j−1).
class Rct {
public:
    Rct() = default;

    /// Validates and constructs; throws std::invalid_argument on failure.
    static Rct from_rows(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    StrongComposition shape() const;
    int at(int row, int col) const { return rows_[row - 1][col - 1]; }
    std::size_t row_count() const { return rows_.size(); }
    int longest_row() const;
    bool empty() const { return rows_.empty(); }

    friend bool operator==(const Rct&, const Rct&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Rule violations for a candidate filling (empty result means valid).
/// Throws std::invalid_argument on empty rows or nonpositive entries.
std::vector<TableauViolation> rct_violations(const std::vector<std::vector<int>>& rows);

/// Values "in hand" at each grid position visited by one insertion scan.
/// Row 0 of the grid holds the value entering each column from the top;
/// positions the scan never reached are absent.
class ScanTrace {
public:
    ScanTrace() = default;
    ScanTrace(int row_limit, int col_limit);

    int row_limit() const { return row_limit_; }
    int col_limit() const { return col_limit_; }

    /// Scanning value at grid position (i, j); absent when unscanned or out
    /// of range, 0 ≤ i ≤ row_limit, 1 ≤ j ≤ col_limit.
    std::optional<int> at(int i, int j) const;

    /// Same, with absent collapsed to 0.
    int at_or_zero(int i, int j) const { return at(i, j).value_or(0); }

    void set(int i, int j, int value);

private:
    int row_limit_ = 0;
    int col_limit_ = 0;
    std::vector<std::optional<int>> grid_;
};

struct InsertionResult {
    Rct result;
    Cell new_box;              // coordinates in `result`
    std::vector<Cell> path;    // boxes that received a value, one per row
    int augmented_row = 0;     // row of new_box
    ScanTrace trace;           // positions indexed by the pre-insertion grid
};

/// Insert b into U, scanning in reverse column reading order.
InsertionResult rct_insert(const Rct& tableau, int b);

struct WordInsertionResult {
    Rct result;
    std::vector<InsertionResult> steps;
};

/// Left-to-right fold of rct_insert over the letters of w.
WordInsertionResult rct_insert_word(const Rct& tableau, const Word& w);

/// Remove the last entry of the given row (which must be the lowest row of
/// its length) and reverse the insertion scan.  Returns the smaller tableau
/// and the letter whose insertion recreates the input.
std::pair<Rct, int> rct_uninsert(const Rct& tableau, int row);

/// All row-strict composition tableaux of the given shape with entries in
/// [1, max_entry], in lexicographic column-reading order.
void for_each_rct(const StrongComposition& shape, int max_entry,
                  const std::function<void(const Rct&)>& visit);
std::vector<Rct> enumerate_rcts(const StrongComposition& shape, int max_entry);

}  // namespace qschur

#endif
