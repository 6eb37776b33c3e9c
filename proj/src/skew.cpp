#include "qschur/skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace qschur {

SkewShape::SkewShape(StrongComposition beta, WeakComposition gamma)
    : beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if (beta_.length() != gamma_.length())
        throw std::invalid_argument("skew shape requires equal lengths");
    if (!contains(gamma_, as_weak(beta_)))
        throw std::invalid_argument("skew shape requires gamma contained in beta");
}

SkewFilling::SkewFilling(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.row_count())
        throw std::invalid_argument("skew filling row count mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int expected = shape_.beta().part(i) - shape_.gamma().part(i);
        if (int(rows_[i].size()) != expected)
            throw std::invalid_argument("skew filling row length mismatch");
        for (int x : rows_[i]) {
            if (x < 1) throw std::invalid_argument("skew filling entries must be >= 1");
        }
    }
}

SkewEntry SkewFilling::entry(int row, int col) const {
    if (row < 1 || row > int(shape_.row_count()))
        throw std::out_of_range("skew entry row out of range");
    const int beta = shape_.beta().part(std::size_t(row - 1));
    const int gamma = shape_.gamma().part(std::size_t(row - 1));
    if (col < 0 || col > beta) throw std::out_of_range("skew entry column out of range");
    if (col <= gamma) return SkewEntry::infinity(col);
    return SkewEntry::finite(rows_[std::size_t(row - 1)][std::size_t(col - gamma - 1)]);
}

std::vector<Triple> list_triples(const SkewFilling& filling) {
    const auto& beta = filling.shape().beta();
    const int k = int(beta.length());
    std::vector<Triple> out;
    for (int i1 = 1; i1 <= k; ++i1) {
        for (int i2 = i1 + 1; i2 <= k; ++i2) {
            const int b1 = beta.part(std::size_t(i1 - 1));
            const int b2 = beta.part(std::size_t(i2 - 1));
            if (b1 >= b2) {
                for (int j = 1; j <= b2; ++j) {
                    Triple t{Triple::Kind::A,
                             Cell{i1, j}, Cell{i2, j}, Cell{i1, j - 1},
                             filling.entry(i1, j), filling.entry(i2, j),
                             filling.entry(i1, j - 1)};
                    out.push_back(t);
                }
            } else {
                for (int j = 0; j <= b1; ++j) {
                    Triple t{Triple::Kind::B,
                             Cell{i2, j + 1}, Cell{i1, j}, Cell{i2, j},
                             filling.entry(i2, j + 1), filling.entry(i1, j),
                             filling.entry(i2, j)};
                    out.push_back(t);
                }
            }
        }
    }
    return out;
}

bool is_inversion(const Triple& t) {
    return (t.b <= t.a && t.a < t.c) || (t.a < t.c && t.c <= t.b);
}

Word column_word(const SkewFilling& filling) {
    const auto& beta = filling.shape().beta();
    const auto& gamma = filling.shape().gamma();
    int cols = 0;
    for (int p : beta.parts()) cols = std::max(cols, p);
    std::vector<int> letters;
    for (int j = 1; j <= cols; ++j) {
        for (int i = int(beta.length()); i >= 1; --i) {
            if (gamma.part(std::size_t(i - 1)) < j && j <= beta.part(std::size_t(i - 1)))
                letters.push_back(filling.entry(i, j).value());
        }
    }
    return Word(std::move(letters));
}

std::vector<SkewViolation> lr_skew_violations(const SkewFilling& filling) {
    std::vector<SkewViolation> out;
    const auto& beta = filling.shape().beta();
    for (int i = 1; i <= int(beta.length()); ++i) {
        for (int j = 0; j + 1 <= beta.part(std::size_t(i - 1)); ++j) {
            if (!(filling.entry(i, j) > filling.entry(i, j + 1)))
                out.push_back({"row not strictly decreasing", Cell{i, j + 1}});
        }
    }
    for (const auto& t : list_triples(filling)) {
        if (!is_inversion(t))
            out.push_back({t.kind == Triple::Kind::A ? "type A triple not an inversion"
                                                     : "type B triple not an inversion",
                           t.cell_b});
    }
    const Word w = column_word(filling);
    if (!w.empty() && !is_regular_reverse_lattice(w))
        out.push_back({"column word not a regular reverse lattice word", Cell{0, 0}});
    return out;
}

bool is_lr_skew(const SkewFilling& filling) { return lr_skew_violations(filling).empty(); }

namespace {

struct LrSkewFill {
    const StrongComposition* beta;
    std::vector<int> gamma;
    std::vector<int> target;               // required count per value
    std::vector<int> counts;
    std::vector<std::vector<int>> rows;    // filled entries per row
    std::vector<Cell> order;               // non-skew boxes, column reading order
    const std::function<void(const SkewFilling&)>* visit;

    int beta_at(int i) const { return beta->part(std::size_t(i - 1)); }
    int gamma_at(int i) const { return gamma[std::size_t(i - 1)]; }

    SkewEntry entry(int i, int j) const {
        if (j <= gamma_at(i)) return SkewEntry::infinity(j);
        return SkewEntry::finite(rows[std::size_t(i - 1)][std::size_t(j - gamma_at(i) - 1)]);
    }

    bool admissible(int i, int j, int v) const {
        const int max_letter = int(target.size());
        if (counts[std::size_t(v - 1)] >= target[std::size_t(v - 1)]) return false;
        // Lattice prefix: placing v must keep #(v+1) >= #v.
        if (v < max_letter && counts[std::size_t(v)] < counts[std::size_t(v - 1)] + 1) return false;
        const SkewEntry placed = SkewEntry::finite(v);
        if (!(entry(i, j - 1) > placed)) return false;
        const int k = int(beta->length());
        // Type A triples with this box as the upper-right entry a.
        for (int i2 = i + 1; i2 <= k; ++i2) {
            if (beta_at(i) < beta_at(i2) || j > beta_at(i2)) continue;
            Triple t{Triple::Kind::A, Cell{i, j}, Cell{i2, j}, Cell{i, j - 1},
                     placed, entry(i2, j), entry(i, j - 1)};
            if (!is_inversion(t)) return false;
        }
        // Type B triples with this box as the lower-right entry a.
        const int jj = j - 1;
        for (int i1 = 1; i1 < i; ++i1) {
            if (beta_at(i1) >= beta_at(i) || jj > beta_at(i1)) continue;
            Triple t{Triple::Kind::B, Cell{i, jj + 1}, Cell{i1, jj}, Cell{i, jj},
                     placed, entry(i1, jj), entry(i, jj)};
            if (!is_inversion(t)) return false;
        }
        return true;
    }

    void run(std::size_t next) {
        if (next == order.size()) {
            SkewShape shape(*beta, WeakComposition(gamma));
            (*visit)(SkewFilling(std::move(shape), rows));
            return;
        }
        const auto [i, j] = order[next];
        for (int v = 1; v <= int(target.size()); ++v) {
            if (!admissible(i, j, v)) continue;
            rows[std::size_t(i - 1)].push_back(v);
            ++counts[std::size_t(v - 1)];
            run(next + 1);
            --counts[std::size_t(v - 1)];
            rows[std::size_t(i - 1)].pop_back();
        }
    }
};

void for_each_gamma(const StrongComposition& beta, const StrongComposition& alpha,
                    const std::function<void(const std::vector<int>&)>& visit) {
    const std::size_t k = beta.length();
    const std::size_t parts = alpha.length();
    std::vector<int> gamma(k, 0);
    std::vector<std::size_t> taken;

    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t placed) {
        if (placed == parts) {
            visit(gamma);
            return;
        }
        for (std::size_t pos = from; pos + (parts - placed) <= k; ++pos) {
            const int part = alpha.part(placed);
            if (part > beta.part(pos)) continue;
            gamma[pos] = part;
            choose(pos + 1, placed + 1);
            gamma[pos] = 0;
        }
    };
    choose(0, 0);
}

}  // namespace

void for_each_lr_skew(const StrongComposition& beta, const StrongComposition& alpha,
                      const Partition& lambda,
                      const std::function<void(const SkewFilling&)>& visit) {
    if (beta.size() != alpha.size() + lambda.size()) return;

    LrSkewFill fill;
    fill.beta = &beta;
    fill.target = reverse_partition(lambda).parts();
    fill.counts.assign(fill.target.size(), 0);
    fill.visit = &visit;

    int cols = 0;
    for (int p : beta.parts()) cols = std::max(cols, p);

    for_each_gamma(beta, alpha, [&](const std::vector<int>& gamma) {
        fill.gamma = gamma;
        fill.rows.assign(beta.length(), {});
        fill.order.clear();
        for (int j = 1; j <= cols; ++j) {
            for (int i = int(beta.length()); i >= 1; --i) {
                if (gamma[std::size_t(i - 1)] < j && j <= beta.part(std::size_t(i - 1)))
                    fill.order.push_back(Cell{i, j});
            }
        }
        fill.run(0);
    });
}

std::vector<SkewFilling> enumerate_lr_skew(const StrongComposition& beta,
                                           const StrongComposition& alpha,
                                           const Partition& lambda) {
    std::vector<SkewFilling> out;
    for_each_lr_skew(beta, alpha, lambda, [&](const SkewFilling& s) { out.push_back(s); });
    return out;
}

}  // namespace qschur
