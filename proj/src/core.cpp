#include "qschur/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qschur {

namespace {

int checked_sum(const std::vector<int>& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

}  // namespace

StrongComposition::StrongComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("strong composition parts must be >= 1");
    }
}

int StrongComposition::size() const { return checked_sum(parts_); }

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw std::invalid_argument("weak composition parts must be >= 0");
    }
}

int WeakComposition::size() const { return checked_sum(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return checked_sum(parts_); }

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int x : letters_) {
        if (x < 1) throw std::invalid_argument("word letters must be >= 1");
    }
}

Partition partition_of(const StrongComposition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

StrongComposition strong_of(const WeakComposition& gamma) {
    std::vector<int> parts;
    for (int p : gamma.parts()) {
        if (p > 0) parts.push_back(p);
    }
    return StrongComposition(std::move(parts));
}

WeakComposition reverse_partition(const Partition& lambda) {
    std::vector<int> parts(lambda.parts().rbegin(), lambda.parts().rend());
    return WeakComposition(std::move(parts));
}

Partition transpose(const Partition& lambda) {
    std::vector<int> parts;
    const int cols = lambda.empty() ? 0 : lambda.part(0);
    for (int j = 1; j <= cols; ++j) {
        int count = 0;
        for (int p : lambda.parts()) {
            if (p >= j) ++count;
        }
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

bool contains(const WeakComposition& gamma, const WeakComposition& beta) {
    if (gamma.length() != beta.length())
        throw std::invalid_argument("containment requires equal lengths; pad explicitly");
    for (std::size_t i = 0; i < gamma.length(); ++i) {
        if (gamma.part(i) > beta.part(i)) return false;
    }
    return true;
}

WeakComposition pad_to(const WeakComposition& gamma, std::size_t k) {
    if (k < gamma.length()) throw std::invalid_argument("pad_to cannot shorten");
    std::vector<int> parts = gamma.parts();
    parts.resize(k, 0);
    return WeakComposition(std::move(parts));
}

WeakComposition as_weak(const StrongComposition& alpha) {
    return WeakComposition(alpha.parts());
}

WeakComposition as_weak(const Partition& lambda) {
    return WeakComposition(lambda.parts());
}

WeakComposition content(const Word& w) {
    int max_letter = 0;
    for (int x : w.letters()) max_letter = std::max(max_letter, x);
    std::vector<int> counts(static_cast<std::size_t>(max_letter), 0);
    for (int x : w.letters()) ++counts[static_cast<std::size_t>(x - 1)];
    return WeakComposition(std::move(counts));
}

bool is_reverse_lattice(const Word& w) {
    int max_letter = 0;
    for (int x : w.letters()) max_letter = std::max(max_letter, x);
    std::vector<int> counts(static_cast<std::size_t>(max_letter) + 1, 0);
    for (int x : w.letters()) {
        ++counts[static_cast<std::size_t>(x)];
        // Appending x can only break the condition for i = x + 1.
        if (x + 1 <= max_letter && counts[static_cast<std::size_t>(x + 1)] < counts[static_cast<std::size_t>(x)])
            return false;
    }
    return true;
}

bool is_regular_reverse_lattice(const Word& w) {
    if (!is_reverse_lattice(w)) return false;
    for (int x : w.letters()) {
        if (x == 1) return true;
    }
    return false;
}

bool col_order_less(const Cell& a, const Cell& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row > b.row;
}

namespace {

Word replace_three(const Word& w, std::size_t pos, int x, int y, int z) {
    std::vector<int> letters = w.letters();
    letters[pos] = x;
    letters[pos + 1] = y;
    letters[pos + 2] = z;
    return Word(std::move(letters));
}

void require_window(const Word& w, std::size_t pos) {
    if (pos + 3 > w.length()) throw std::invalid_argument("knuth move position out of range");
}

}  // namespace

Word knuth_k1(const Word& w, std::size_t pos) {
    require_window(w, pos);
    const int b = w.letter(pos), c = w.letter(pos + 1), a = w.letter(pos + 2);
    if (!(a < b && b <= c)) throw std::invalid_argument("knuth_k1: letters do not match bca with a<b<=c");
    return replace_three(w, pos, b, a, c);
}

Word knuth_k1_inv(const Word& w, std::size_t pos) {
    require_window(w, pos);
    const int b = w.letter(pos), a = w.letter(pos + 1), c = w.letter(pos + 2);
    if (!(a < b && b <= c)) throw std::invalid_argument("knuth_k1_inv: letters do not match bac with a<b<=c");
    return replace_three(w, pos, b, c, a);
}

Word knuth_k2(const Word& w, std::size_t pos) {
    require_window(w, pos);
    const int a = w.letter(pos), c = w.letter(pos + 1), b = w.letter(pos + 2);
    if (!(a <= b && b < c)) throw std::invalid_argument("knuth_k2: letters do not match acb with a<=b<c");
    return replace_three(w, pos, c, a, b);
}

Word knuth_k2_inv(const Word& w, std::size_t pos) {
    require_window(w, pos);
    const int c = w.letter(pos), a = w.letter(pos + 1), b = w.letter(pos + 2);
    if (!(a <= b && b < c)) throw std::invalid_argument("knuth_k2_inv: letters do not match cab with a<=b<c");
    return replace_three(w, pos, a, c, b);
}

}  // namespace qschur
