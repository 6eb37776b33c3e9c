#include "qschur/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace qschur {

namespace {

void require_positive_entries(const std::vector<std::vector<int>>& rows) {
    for (const auto& row : rows) {
        for (int x : row) {
            if (x < 1) throw std::invalid_argument("tableau entries must be >= 1");
        }
    }
}

}  // namespace

std::vector<TableauViolation> rrst_violations(const std::vector<std::vector<int>>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
        if (i + 1 < rows.size() && rows[i].size() < rows[i + 1].size())
            throw std::invalid_argument("row lengths must form a partition shape");
    }
    require_positive_entries(rows);

    std::vector<TableauViolation> violations;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j) {
            if (rows[i][j] <= rows[i][j + 1])
                violations.push_back({Cell{int(i) + 1, int(j) + 2}, "row not strictly decreasing"});
        }
        if (i + 1 < rows.size()) {
            for (std::size_t j = 0; j < rows[i + 1].size(); ++j) {
                if (rows[i][j] < rows[i + 1][j])
                    violations.push_back({Cell{int(i) + 2, int(j) + 1}, "column not weakly decreasing"});
            }
        }
    }
    return violations;
}

Rrst Rrst::from_rows(std::vector<std::vector<int>> rows) {
    auto violations = rrst_violations(rows);
    if (!violations.empty())
        throw std::invalid_argument("not a reverse row-strict tableau: " + violations.front().rule);
    Rrst t;
    t.rows_ = std::move(rows);
    return t;
}

Partition Rrst::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(int(row.size()));
    return Partition(std::move(parts));
}

Rrst column_superstandard(const Partition& mu) {
    const int m = mu.empty() ? 0 : mu.part(0);
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < mu.length(); ++i) {
        std::vector<int> row(static_cast<std::size_t>(mu.part(i)));
        for (int j = 1; j <= mu.part(i); ++j) row[static_cast<std::size_t>(j - 1)] = m + 1 - j;
        rows.push_back(std::move(row));
    }
    return Rrst::from_rows(std::move(rows));
}

std::pair<Rrst, Cell> schensted_insert(const Rrst& tableau, int b) {
    if (b < 1) throw std::invalid_argument("inserted entry must be >= 1");
    std::vector<std::vector<int>> rows = tableau.rows();
    int carry = b;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        // Rows strictly decrease, so the first entry <= carry is the largest.
        std::size_t pos = 0;
        while (pos < row.size() && row[pos] > carry) ++pos;
        if (pos == row.size()) {
            row.push_back(carry);
            const Cell added{int(r) + 1, int(row.size())};
            return {Rrst::from_rows(std::move(rows)), added};
        }
        std::swap(carry, row[pos]);
    }
    rows.push_back({carry});
    const Cell added{int(rows.size()), 1};
    return {Rrst::from_rows(std::move(rows)), added};
}

TwoLineArray::TwoLineArray(Word upper, Word lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.length() != lower_.length())
        throw std::invalid_argument("two-line array rows must have equal length");
    for (std::size_t r = 0; r + 1 < upper_.length(); ++r) {
        if (upper_.letter(r) < upper_.letter(r + 1))
            throw std::invalid_argument("two-line array upper row must weakly decrease");
        if (upper_.letter(r) == upper_.letter(r + 1) && lower_.letter(r) > lower_.letter(r + 1))
            throw std::invalid_argument("two-line array lower row must weakly increase within blocks");
    }
}

RskPair rsk_forward(const TwoLineArray& array) {
    Rrst insertion;
    std::vector<std::vector<int>> recording_rows;
    for (std::size_t r = 0; r < array.length(); ++r) {
        auto [next, cell] = schensted_insert(insertion, array.lower().letter(r));
        insertion = std::move(next);
        if (cell.row > int(recording_rows.size())) recording_rows.emplace_back();
        recording_rows[static_cast<std::size_t>(cell.row - 1)].push_back(array.upper().letter(r));
    }
    return {std::move(insertion), Rrst::from_rows(std::move(recording_rows))};
}

TwoLineArray rsk_inverse(const Rrst& insertion, const Rrst& recording) {
    if (insertion.shape() != recording.shape())
        throw std::invalid_argument("rsk_inverse: tableaux must share a shape");

    std::vector<std::vector<int>> p = insertion.rows();
    std::vector<std::vector<int>> q = recording.rows();
    std::vector<int> upper_rev, lower_rev;

    auto remaining = [&] {
        std::size_t n = 0;
        for (const auto& row : p) n += row.size();
        return n;
    };

    while (remaining() > 0) {
        // The cell recorded last holds the smallest value; among equal values
        // the later insertion sits earlier in column reading order.
        Cell target{0, 0};
        int best = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = 0; j < q[i].size(); ++j) {
                Cell here{int(i) + 1, int(j) + 1};
                if (target.row == 0 || q[i][j] < best ||
                    (q[i][j] == best && col_order_less(here, target))) {
                    best = q[i][j];
                    target = here;
                }
            }
        }
        const std::size_t r = static_cast<std::size_t>(target.row - 1);
        const std::size_t c = static_cast<std::size_t>(target.col - 1);
        const bool corner = (c + 1 == q[r].size()) &&
                            (r + 1 == q.size() || q[r + 1].size() <= c);
        if (!corner)
            throw std::invalid_argument("rsk_inverse: recording tableau is not a valid insertion history");

        int carry = p[r].back();
        p[r].pop_back();
        q[r].pop_back();
        if (p[r].empty()) {
            p.pop_back();
            q.pop_back();
        }
        for (std::size_t i = r; i-- > 0;) {
            // Reverse bump: the rightmost entry >= carry is the one that
            // displaced it.
            auto& row = p[i];
            std::size_t pos = 0;
            while (pos < row.size() && row[pos] > carry) ++pos;
            // Entries >= carry form a prefix; take its last element.
            if (pos < row.size() && row[pos] == carry) {
                // Equal entries are impossible within a row, so pos is exact.
            } else if (pos == 0) {
                throw std::invalid_argument("rsk_inverse: no entry available to un-bump");
            } else {
                --pos;
            }
            std::swap(carry, row[pos]);
        }
        upper_rev.push_back(best);
        lower_rev.push_back(carry);
    }

    std::reverse(upper_rev.begin(), upper_rev.end());
    std::reverse(lower_rev.begin(), lower_rev.end());
    return TwoLineArray(Word(std::move(upper_rev)), Word(std::move(lower_rev)));
}

namespace {

void fill_rrst(const Partition& shape, int max_entry, std::vector<std::vector<int>>& rows,
               std::vector<Cell>& order, std::size_t next,
               const std::function<void(const Rrst&)>& visit) {
    if (next == order.size()) {
        visit(Rrst::from_rows(rows));
        return;
    }
    const auto [row, col] = order[next];
    const std::size_t i = static_cast<std::size_t>(row - 1);
    const std::size_t j = static_cast<std::size_t>(col - 1);
    // Column reading order guarantees the cell below and the cell to the
    // left are already placed.
    const int below = (i + 1 < rows.size() && j < static_cast<std::size_t>(shape.part(i + 1)))
                          ? rows[i + 1][j]
                          : 1;
    const int left_bound = (j > 0) ? rows[i][j - 1] - 1 : max_entry;
    for (int v = below; v <= std::min(max_entry, left_bound); ++v) {
        rows[i][j] = v;
        fill_rrst(shape, max_entry, rows, order, next + 1, visit);
    }
}

}  // namespace

void for_each_rrst(const Partition& shape, int max_entry,
                   const std::function<void(const Rrst&)>& visit) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be >= 1");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < shape.length(); ++i)
        rows.emplace_back(static_cast<std::size_t>(shape.part(i)), 0);

    std::vector<Cell> order;
    const int cols = shape.empty() ? 0 : shape.part(0);
    for (int j = 1; j <= cols; ++j) {
        for (int i = int(shape.length()); i >= 1; --i) {
            if (shape.part(static_cast<std::size_t>(i - 1)) >= j) order.push_back(Cell{i, j});
        }
    }
    fill_rrst(shape, max_entry, rows, order, 0, visit);
}

std::vector<Rrst> enumerate_rrsts(const Partition& shape, int max_entry) {
    std::vector<Rrst> out;
    for_each_rrst(shape, max_entry, [&](const Rrst& t) { out.push_back(t); });
    return out;
}

}  // namespace qschur
