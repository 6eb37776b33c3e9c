#include "qschur/rct.hpp"

#include <algorithm>
#include <stdexcept>

namespace qschur {

std::vector<TableauViolation> rct_violations(const std::vector<std::vector<int>>& rows) {
    for (const auto& row : rows) {
        if (row.empty()) throw std::invalid_argument("composition tableau rows must be nonempty");
        for (int x : row) {
            if (x < 1) throw std::invalid_argument("tableau entries must be >= 1");
        }
    }

    std::vector<TableauViolation> violations;
    const int k = int(rows.size());
    for (int i = 0; i + 1 < k; ++i) {
        if (rows[i][0] > rows[i + 1][0])
            violations.push_back({Cell{i + 2, 1}, "first column not weakly increasing"});
    }
    for (int i = 0; i < k; ++i) {
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j) {
            if (rows[i][j] <= rows[i][j + 1])
                violations.push_back({Cell{i + 1, int(j) + 2}, "row not strictly decreasing"});
        }
    }

    // Triple rule on the zero-padded rectangle.
    auto padded = [&](int i, int j) {
        return j <= int(rows[i - 1].size()) ? rows[i - 1][std::size_t(j - 1)] : 0;
    };
    int m = 0;
    for (const auto& row : rows) m = std::max(m, int(row.size()));
    for (int i1 = 1; i1 <= k; ++i1) {
        for (int i2 = i1 + 1; i2 <= k; ++i2) {
            for (int j = 2; j <= m; ++j) {
                const int b = padded(i2, j);
                const int a = padded(i1, j);
                const int c = padded(i1, j - 1);
                if (b != 0 && b > a && b < c)
                    violations.push_back({Cell{i2, j}, "triple rule violated"});
            }
        }
    }
    return violations;
}

Rct Rct::from_rows(std::vector<std::vector<int>> rows) {
    auto violations = rct_violations(rows);
    if (!violations.empty())
        throw std::invalid_argument("not a row-strict composition tableau: " + violations.front().rule);
    Rct t;
    t.rows_ = std::move(rows);
    return t;
}

StrongComposition Rct::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(int(row.size()));
    return StrongComposition(std::move(parts));
}

int Rct::longest_row() const {
    int m = 0;
    for (const auto& row : rows_) m = std::max(m, int(row.size()));
    return m;
}

ScanTrace::ScanTrace(int row_limit, int col_limit)
    : row_limit_(row_limit),
      col_limit_(col_limit),
      grid_(std::size_t(row_limit + 1) * std::size_t(col_limit + 1)) {}

std::optional<int> ScanTrace::at(int i, int j) const {
    if (i < 0 || i > row_limit_ || j < 1 || j > col_limit_) return std::nullopt;
    return grid_[std::size_t(i) * std::size_t(col_limit_ + 1) + std::size_t(j)];
}

void ScanTrace::set(int i, int j, int value) {
    grid_[std::size_t(i) * std::size_t(col_limit_ + 1) + std::size_t(j)] = value;
}

InsertionResult rct_insert(const Rct& tableau, int b) {
    if (b < 1) throw std::invalid_argument("inserted entry must be >= 1");

    std::vector<std::vector<int>> rows = tableau.rows();
    const int k = int(rows.size());
    const int m = tableau.longest_row();

    InsertionResult out;
    out.trace = ScanTrace(k + 1, m + 2);
    std::vector<Cell> bump_sites;  // pre-insertion row indices

    int in_hand = b;
    for (int j = m + 1; j >= 2; --j) {
        out.trace.set(0, j, in_hand);
        for (int i = 1; i <= k; ++i) {
            out.trace.set(i, j, in_hand);
            auto& row = rows[std::size_t(i - 1)];
            const int len = int(row.size());
            if (len >= j) {
                // Bump when the occupant is weakly smaller and the entry to
                // its left keeps the row strictly decreasing.
                const int occupant = row[std::size_t(j - 1)];
                const int left = row[std::size_t(j - 2)];
                if (occupant <= in_hand && in_hand < left) {
                    row[std::size_t(j - 1)] = in_hand;
                    bump_sites.push_back(Cell{i, j});
                    in_hand = occupant;
                }
            } else if (len == j - 1) {
                const int last = row.back();
                if (in_hand < last) {
                    row.push_back(in_hand);
                    out.new_box = Cell{i, j};
                    out.augmented_row = i;
                    out.path = bump_sites;
                    out.path.push_back(out.new_box);
                    std::sort(out.path.begin(), out.path.end(),
                              [](const Cell& a, const Cell& b) { return a.row < b.row; });
                    out.result = Rct::from_rows(std::move(rows));
                    return out;
                }
            }
        }
    }

    // The entry reaches the first column: open a new row below the lowest
    // first-column entry that is weakly smaller (at the top when none is).
    int after = 0;
    while (after < k && rows[std::size_t(after)][0] <= in_hand) ++after;
    const int new_row = after + 1;
    rows.insert(rows.begin() + after, {in_hand});
    for (int i = 0; i <= new_row; ++i) out.trace.set(i, 1, in_hand);

    out.new_box = Cell{new_row, 1};
    out.augmented_row = new_row;
    out.path = bump_sites;
    for (auto& cell : out.path) {
        if (cell.row >= new_row) ++cell.row;
    }
    out.path.push_back(out.new_box);
    std::sort(out.path.begin(), out.path.end(),
              [](const Cell& a, const Cell& b) { return a.row < b.row; });
    out.result = Rct::from_rows(std::move(rows));
    return out;
}

WordInsertionResult rct_insert_word(const Rct& tableau, const Word& w) {
    WordInsertionResult out;
    out.result = tableau;
    for (int letter : w.letters()) {
        out.steps.push_back(rct_insert(out.result, letter));
        out.result = out.steps.back().result;
    }
    return out;
}

std::pair<Rct, int> rct_uninsert(const Rct& tableau, int row) {
    const auto& rows_in = tableau.rows();
    if (row < 1 || row > int(rows_in.size()))
        throw std::invalid_argument("uninsert row out of range");
    const int len = int(rows_in[std::size_t(row - 1)].size());
    for (int r = row + 1; r <= int(rows_in.size()); ++r) {
        if (int(rows_in[std::size_t(r - 1)].size()) == len)
            throw std::invalid_argument("uninsert target must be the lowest row of its length");
    }

    std::vector<std::vector<int>> rows = rows_in;
    int in_hand = rows[std::size_t(row - 1)].back();
    rows[std::size_t(row - 1)].pop_back();

    int start_col, start_row;
    if (len == 1) {
        rows.erase(rows.begin() + (row - 1));
        start_col = 2;
        start_row = int(rows.size());
    } else {
        start_col = len;
        start_row = row - 1;
    }

    int max_len = 0;
    for (const auto& r : rows) max_len = std::max(max_len, int(r.size()));

    // Reverse the scan: up each column, then one column to the right.
    for (int j = start_col; j <= max_len + 1; ++j) {
        const int top = (j == start_col) ? start_row : int(rows.size());
        for (int i = top; i >= 1; --i) {
            auto& r = rows[std::size_t(i - 1)];
            if (int(r.size()) < j) continue;
            const int occupant = r[std::size_t(j - 1)];
            const int right = int(r.size()) >= j + 1 ? r[std::size_t(j)] : 0;
            if (occupant >= in_hand && in_hand > right) {
                r[std::size_t(j - 1)] = in_hand;
                in_hand = occupant;
            }
        }
    }
    return {Rct::from_rows(std::move(rows)), in_hand};
}

namespace {

struct RctFill {
    const std::vector<int>* shape;  // 1-based via helper
    int max_entry;
    std::vector<std::vector<int>> rows;
    std::vector<Cell> order;
    const std::function<void(const Rct&)>* visit;

    int part(int i) const { return (*shape)[std::size_t(i - 1)]; }

    bool admissible(int i, int j, int v) const {
        if (j == 1) {
            // First column weakly increases downward; the cell below is
            // already placed.
            if (i < int(rows.size()) && v > rows[std::size_t(i)][0]) return false;
            return true;
        }
        const int left = rows[std::size_t(i - 1)][std::size_t(j - 2)];
        if (v >= left) return false;
        // Triple rule against already-placed cells.
        for (int i2 = i + 1; i2 <= int(rows.size()); ++i2) {
            if (part(i2) < j) continue;
            const int b = rows[std::size_t(i2 - 1)][std::size_t(j - 1)];
            if (b > v && b < left) return false;
        }
        for (int i1 = 1; i1 < i; ++i1) {
            if (part(i1) != j - 1) continue;
            if (v < rows[std::size_t(i1 - 1)][std::size_t(j - 2)]) return false;
        }
        return true;
    }

    void run(std::size_t next) {
        if (next == order.size()) {
            (*visit)(Rct::from_rows(rows));
            return;
        }
        const auto [i, j] = order[next];
        for (int v = 1; v <= max_entry; ++v) {
            if (!admissible(i, j, v)) continue;
            rows[std::size_t(i - 1)][std::size_t(j - 1)] = v;
            run(next + 1);
        }
    }
};

}  // namespace

void for_each_rct(const StrongComposition& shape, int max_entry,
                  const std::function<void(const Rct&)>& visit) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be >= 1");

    RctFill fill;
    fill.shape = &shape.parts();
    fill.max_entry = max_entry;
    fill.visit = &visit;
    for (int p : shape.parts()) fill.rows.emplace_back(std::size_t(p), 0);

    int m = 0;
    for (int p : shape.parts()) m = std::max(m, p);
    for (int j = 1; j <= m; ++j) {
        for (int i = int(shape.length()); i >= 1; --i) {
            if (shape.part(std::size_t(i - 1)) >= j) fill.order.push_back(Cell{i, j});
        }
    }
    fill.run(0);
}

std::vector<Rct> enumerate_rcts(const StrongComposition& shape, int max_entry) {
    std::vector<Rct> out;
    for_each_rct(shape, max_entry, [&](const Rct& t) { out.push_back(t); });
    return out;
}

}  // namespace qschur
