#include <algorithm>
#include <set>

#include "zsurg/lowindex.hpp"

namespace zsurg {

int letter_column(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

int CosetTable::act(int coset, int letter) const
{
    if (coset < 0)
        return kNoCoset;
    return rows.at(static_cast<std::size_t>(coset)).at(static_cast<std::size_t>(letter_column(letter)));
}

int CosetTable::act(int coset, const Word& w) const
{
    for (int x : w.letters())
        coset = act(coset, x);
    return coset;
}

std::vector<std::vector<int>> relator_columns(const std::vector<Word>& words)
{
    std::vector<std::vector<int>> out;
    for (const Word& w : words) {
        std::vector<int> cols;
        for (int x : w.letters())
            cols.push_back(letter_column(x));
        out.push_back(std::move(cols));
    }
    return out;
}

// All cyclic conjugates of each relator and its inverse, bucketed by first column.
std::vector<std::vector<std::vector<int>>> conjugates_by_column(const std::vector<Word>& relators, int ncols)
{
    std::vector<std::set<std::vector<int>>> sets(static_cast<std::size_t>(ncols));
    for (const Word& r0 : relators) {
        const Word r = cyclically_reduce(r0);
        if (r.empty())
            continue;
        for (const Word& v : {r, r.inverse()}) {
            const auto cols = relator_columns({v})[0];
            for (std::size_t k = 0; k < cols.size(); ++k) {
                std::vector<int> rot(cols.begin() + static_cast<std::ptrdiff_t>(k), cols.end());
                rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
                sets[static_cast<std::size_t>(rot[0])].insert(std::move(rot));
            }
        }
    }
    std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(ncols));
    for (int c = 0; c < ncols; ++c)
        out[static_cast<std::size_t>(c)].assign(sets[static_cast<std::size_t>(c)].begin(),
                                                sets[static_cast<std::size_t>(c)].end());
    return out;
}

CosetTable standardize(const CosetTable& t)
{
    const int n = t.coset_count();
    const int ncols = 2 * t.generator_count;
    std::vector<int> to_new(static_cast<std::size_t>(n), -1), to_old;
    to_new[0] = 0;
    to_old.push_back(0);
    for (std::size_t r = 0; r < to_old.size(); ++r)
        for (int x = 0; x < ncols; ++x) {
            const int d = t.rows[static_cast<std::size_t>(to_old[r])][static_cast<std::size_t>(x)];
            if (d >= 0 && to_new[static_cast<std::size_t>(d)] < 0) {
                to_new[static_cast<std::size_t>(d)] = static_cast<int>(to_old.size());
                to_old.push_back(d);
            }
        }
    CosetTable out;
    out.generator_count = t.generator_count;
    out.complete = t.complete;
    out.rows.resize(to_old.size());
    for (std::size_t r = 0; r < to_old.size(); ++r)
        for (int x = 0; x < ncols; ++x) {
            const int d = t.rows[static_cast<std::size_t>(to_old[r])][static_cast<std::size_t>(x)];
            out.rows[r].push_back(d < 0 ? kNoCoset : to_new[static_cast<std::size_t>(d)]);
        }
    return out;
}

namespace {

class Enumerator {
public:
    Enumerator(const GroupPresentation& p, std::size_t cap)
        : ncols_(2 * p.generator_count), cap_(std::max<std::size_t>(cap, 1))
    {
        for (const Word& r : p.relators) {
            const Word c = cyclically_reduce(r);
            if (!c.empty())
                relators_.push_back(relator_columns({c})[0]);
        }
        conj_ = conjugates_by_column(p.relators, ncols_);
        new_row();
    }

    CosetTable run(const std::vector<Word>& subgroup_generators)
    {
        const auto subgens = relator_columns(subgroup_generators);
        for (std::size_t i = 0; i < subgens.size();) {
            if (!scan_and_fill(0, subgens[i])) {
                make_room(0);
                continue;
            }
            process_deductions();
            ++i;
        }

        std::size_t c = 0;
        while (c < rows()) {
            if (!process_coset(static_cast<int>(c))) {
                c = make_room(c);
                continue;
            }
            ++c;
        }
        compact(0);

        CosetTable t;
        t.generator_count = ncols_ / 2;
        t.complete = true;
        t.rows.resize(rows());
        for (std::size_t r = 0; r < rows(); ++r)
            t.rows[r].assign(table_.begin() + static_cast<std::ptrdiff_t>(r * ncols_),
                             table_.begin() + static_cast<std::ptrdiff_t>((r + 1) * ncols_));
        return standardize(t);
    }

private:
    std::size_t rows() const { return live_.size(); }
    int& T(int c, int x) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(x)]; }

    int new_row()
    {
        if (rows() >= cap_)
            return kNoCoset;
        const int id = static_cast<int>(rows());
        table_.resize(table_.size() + static_cast<std::size_t>(ncols_), kNoCoset);
        parent_.push_back(id);
        live_.push_back(1);
        return id;
    }

    int rep(int c)
    {
        while (parent_[static_cast<std::size_t>(c)] != c) {
            parent_[static_cast<std::size_t>(c)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(c)])];
            c = parent_[static_cast<std::size_t>(c)];
        }
        return c;
    }

    bool define(int c, int x)
    {
        const int n = new_row();
        if (n == kNoCoset)
            return false;
        T(c, x) = n;
        T(n, x ^ 1) = c;
        deductions_.emplace_back(c, x);
        return true;
    }

    void merge(int k, int l)
    {
        k = rep(k);
        l = rep(l);
        if (k == l)
            return;
        if (k > l)
            std::swap(k, l);
        parent_[static_cast<std::size_t>(l)] = k;
        live_[static_cast<std::size_t>(l)] = 0;
        queue_.push_back(l);
    }

    void coincidence(int a, int b)
    {
        queue_.clear();
        merge(a, b);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            const int e = queue_[qi];
            for (int x = 0; x < ncols_; ++x) {
                const int f = T(e, x);
                if (f < 0)
                    continue;
                if (T(f, x ^ 1) == e)
                    T(f, x ^ 1) = kNoCoset;
                const int e1 = rep(e), f1 = rep(f);
                if (T(e1, x) >= 0)
                    merge(f1, T(e1, x));
                else if (T(f1, x ^ 1) >= 0)
                    merge(e1, T(f1, x ^ 1));
                else {
                    T(e1, x) = f1;
                    T(f1, x ^ 1) = e1;
                    deductions_.emplace_back(e1, x);
                }
            }
        }
    }

    bool scan_and_fill(int c, const std::vector<int>& w)
    {
        if (w.empty())
            return true;
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && T(f, w[static_cast<std::size_t>(i)]) >= 0)
                f = T(f, w[static_cast<std::size_t>(i++)]);
            if (i > j) {
                if (f != b)
                    coincidence(f, b);
                return true;
            }
            while (j >= i && T(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0)
                b = T(b, w[static_cast<std::size_t>(j--)] ^ 1);
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (i == j) {
                T(f, w[static_cast<std::size_t>(i)]) = b;
                T(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
                deductions_.emplace_back(f, w[static_cast<std::size_t>(i)]);
                return true;
            }
            if (!define(f, w[static_cast<std::size_t>(i)]))
                return false;
        }
    }

    // Scan without defining; fills a single gap as a deduction.
    void scan(int c, const std::vector<int>& w)
    {
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        while (i <= j && T(f, w[static_cast<std::size_t>(i)]) >= 0)
            f = T(f, w[static_cast<std::size_t>(i++)]);
        if (i > j) {
            if (f != b)
                coincidence(f, b);
            return;
        }
        while (j >= i && T(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0)
            b = T(b, w[static_cast<std::size_t>(j--)] ^ 1);
        if (j < i)
            coincidence(f, b);
        else if (i == j) {
            T(f, w[static_cast<std::size_t>(i)]) = b;
            T(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
            deductions_.emplace_back(f, w[static_cast<std::size_t>(i)]);
        }
    }

    void process_deductions()
    {
        while (!deductions_.empty()) {
            const auto [c, x] = deductions_.back();
            deductions_.pop_back();
            if (!live_[static_cast<std::size_t>(c)])
                continue;
            for (const auto& r : conj_[static_cast<std::size_t>(x)]) {
                scan(c, r);
                if (!live_[static_cast<std::size_t>(c)])
                    break;
            }
        }
    }

    bool process_coset(int c)
    {
        if (!live_[static_cast<std::size_t>(c)])
            return true;
        for (const auto& r : relators_) {
            if (!scan_and_fill(c, r))
                return false;
            process_deductions();
            if (!live_[static_cast<std::size_t>(c)])
                return true;
        }
        for (int x = 0; x < ncols_; ++x) {
            if (T(c, x) >= 0)
                continue;
            if (!define(c, x))
                return false;
            process_deductions();
            if (!live_[static_cast<std::size_t>(c)])
                return true;
        }
        return true;
    }

    // Lookahead over every live coset, then compaction. Returns the new
    // position of the first live coset at or after `c`.
    std::size_t make_room(std::size_t c)
    {
        deductions_.clear();
        for (std::size_t d = 0; d < rows(); ++d)
            for (const auto& r : relators_) {
                if (!live_[d])
                    break;
                scan(static_cast<int>(d), r);
                process_deductions();
            }
        const std::size_t pos = compact(c);
        if (rows() >= cap_)
            throw LowIndexError(LowIndexErrc::BudgetExhausted,
                                "coset table full at " + std::to_string(cap_) + " cosets");
        return pos;
    }

    std::size_t compact(std::size_t c)
    {
        std::vector<int> remap(rows(), kNoCoset);
        int next = 0;
        std::size_t pos = 0;
        for (std::size_t r = 0; r < rows(); ++r) {
            if (r < c && live_[r])
                ++pos;
            if (live_[r])
                remap[r] = next++;
        }
        std::vector<int> table(static_cast<std::size_t>(next) * static_cast<std::size_t>(ncols_), kNoCoset);
        for (std::size_t r = 0; r < rows(); ++r) {
            if (!live_[r])
                continue;
            for (int x = 0; x < ncols_; ++x) {
                const int d = T(static_cast<int>(r), x);
                table[static_cast<std::size_t>(remap[r]) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(x)] =
                    d < 0 ? kNoCoset : remap[static_cast<std::size_t>(rep(d))];
            }
        }
        table_ = std::move(table);
        live_.assign(static_cast<std::size_t>(next), 1);
        parent_.resize(static_cast<std::size_t>(next));
        for (int r = 0; r < next; ++r)
            parent_[static_cast<std::size_t>(r)] = r;
        deductions_.clear();
        return pos;
    }

    int ncols_;
    std::size_t cap_;
    std::vector<int> table_;
    std::vector<int> parent_;
    std::vector<char> live_;
    std::vector<std::pair<int, int>> deductions_;
    std::vector<int> queue_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<std::vector<int>>> conj_;
};

}  // namespace

CosetTable coset_enumerate(const GroupPresentation& p, const std::vector<Word>& subgroup_generators,
                           std::size_t max_cosets)
{
    p.validate();
    if (p.generator_count == 0) {
        CosetTable t;
        t.complete = true;
        t.rows.resize(1);
        return t;
    }
    return Enumerator(p, max_cosets).run(subgroup_generators);
}

}  // namespace zsurg
