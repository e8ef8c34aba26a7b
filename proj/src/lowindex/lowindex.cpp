#include <algorithm>
#include <map>
#include <unordered_map>

#include "zsurg/lowindex.hpp"
#include "zsurg/perm_kernels.hpp"

namespace zsurg {

int letter_column(int letter);
std::vector<std::vector<std::vector<int>>> conjugates_by_column(const std::vector<Word>& relators, int ncols);
CosetTable standardize(const CosetTable& t);

namespace {

class SubgroupSearch {
public:
    SubgroupSearch(const GroupPresentation& p, int max_index)
        : max_(max_index), ncols_(2 * p.generator_count),
          table_(static_cast<std::size_t>(max_index) * static_cast<std::size_t>(ncols_), kNoCoset),
          conj_(conjugates_by_column(p.relators, ncols_))
    {
    }

    std::vector<CosetTable> run()
    {
        n_ = 1;
        search();
        return std::move(found_);
    }

private:
    int& T(int c, int x) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(x)]; }

    void set_entry(int c, int x, int d)
    {
        T(c, x) = d;
        T(d, x ^ 1) = c;
        trail_.emplace_back(c, x);
        trail_.emplace_back(d, x ^ 1);
        pending_.emplace_back(c, x);
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            T(trail_.back().first, trail_.back().second) = kNoCoset;
            trail_.pop_back();
        }
    }

    // False on a contradiction.
    bool scan(int c, const std::vector<int>& w)
    {
        const int len = static_cast<int>(w.size());
        int f = c, i = 0;
        while (i < len && T(f, w[static_cast<std::size_t>(i)]) >= 0)
            f = T(f, w[static_cast<std::size_t>(i++)]);
        if (i == len)
            return f == c;
        int b = c, j = len - 1;
        while (j > i && T(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0)
            b = T(b, w[static_cast<std::size_t>(j--)] ^ 1);
        if (j > i)
            return true;
        if (T(b, w[static_cast<std::size_t>(i)] ^ 1) >= 0)
            return false;
        set_entry(f, w[static_cast<std::size_t>(i)], b);
        return true;
    }

    bool propagate()
    {
        while (!pending_.empty()) {
            const auto [c, x] = pending_.back();
            pending_.pop_back();
            for (const auto& r : conj_[static_cast<std::size_t>(x)])
                if (!scan(c, r)) {
                    pending_.clear();
                    return false;
                }
        }
        return true;
    }

    // Renumber from each alpha and compare with the table; a smaller
    // renumbering means a conjugate subgroup comes earlier in the search.
    bool canonical()
    {
        std::vector<int> to_new(static_cast<std::size_t>(n_)), to_old(static_cast<std::size_t>(n_));
        for (int alpha = 1; alpha < n_; ++alpha) {
            std::fill(to_new.begin(), to_new.end(), -1);
            to_new[static_cast<std::size_t>(alpha)] = 0;
            to_old[0] = alpha;
            int count = 1;
            bool decided = false;
            for (int r = 0; r < n_ && !decided; ++r) {
                if (r >= count)
                    break;
                for (int x = 0; x < ncols_; ++x) {
                    const int e = T(to_old[static_cast<std::size_t>(r)], x);
                    const int mine = T(r, x);
                    if (e < 0 || mine < 0) {
                        decided = true;
                        break;
                    }
                    int& ne = to_new[static_cast<std::size_t>(e)];
                    if (ne < 0) {
                        ne = count;
                        to_old[static_cast<std::size_t>(count++)] = e;
                    }
                    if (ne < mine)
                        return false;
                    if (ne > mine) {
                        decided = true;
                        break;
                    }
                }
            }
        }
        return true;
    }

    void search()
    {
        if (!canonical())
            return;
        int c = -1, x = -1;
        for (int r = 0; r < n_ && c < 0; ++r)
            for (int k = 0; k < ncols_; ++k)
                if (T(r, k) < 0) {
                    c = r;
                    x = k;
                    break;
                }
        if (c < 0) {
            CosetTable t;
            t.generator_count = ncols_ / 2;
            t.complete = true;
            for (int r = 0; r < n_; ++r)
                t.rows.emplace_back(table_.begin() + static_cast<std::ptrdiff_t>(r * ncols_),
                                    table_.begin() + static_cast<std::ptrdiff_t>((r + 1) * ncols_));
            found_.push_back(std::move(t));
            return;
        }
        for (int beta = 0; beta < n_; ++beta) {
            if (T(beta, x ^ 1) >= 0)
                continue;
            const std::size_t mark = trail_.size();
            set_entry(c, x, beta);
            if (propagate())
                search();
            undo(mark);
        }
        if (n_ < max_) {
            const std::size_t mark = trail_.size();
            set_entry(c, x, n_++);
            if (propagate())
                search();
            undo(mark);
            --n_;
        }
    }

    int max_;
    int ncols_;
    int n_ = 1;
    std::vector<int> table_;
    std::vector<std::vector<std::vector<int>>> conj_;
    std::vector<std::pair<int, int>> trail_;
    std::vector<std::pair<int, int>> pending_;
    std::vector<CosetTable> found_;
};

std::vector<Perm16> generator_perms(const CosetTable& t)
{
    if (t.coset_count() > static_cast<int>(kPerm16Degree))
        throw LowIndexError(LowIndexErrc::IndexTooLarge,
                            "permutation degree " + std::to_string(t.coset_count()) + " exceeds 16");
    std::vector<Perm16> gens;
    for (int g = 0; g < t.generator_count; ++g) {
        Perm16 p = identity_perm16();
        for (int c = 0; c < t.coset_count(); ++c)
            p[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(t.rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(2 * g)]);
        gens.push_back(p);
    }
    return gens;
}

}  // namespace

std::vector<SubgroupClass> low_index_subgroups(const GroupPresentation& p, int max_index)
{
    p.validate();
    if (max_index < 1 || max_index > kMaxLowIndex)
        throw LowIndexError(LowIndexErrc::IndexTooLarge,
                            "max index must lie in 1.." + std::to_string(kMaxLowIndex));
    std::vector<CosetTable> tables;
    if (p.generator_count == 0) {
        CosetTable t;
        t.complete = true;
        t.rows.resize(1);
        tables.push_back(t);
    } else {
        tables = SubgroupSearch(p, max_index).run();
    }
    std::sort(tables.begin(), tables.end(), [](const CosetTable& a, const CosetTable& b) {
        if (a.coset_count() != b.coset_count())
            return a.coset_count() < b.coset_count();
        return a.rows < b.rows;
    });
    std::vector<SubgroupClass> out;
    for (CosetTable& t : tables) {
        SubgroupClass s;
        s.index = t.coset_count();
        s.core_index = core_index(t);
        s.table = std::move(t);
        out.push_back(std::move(s));
    }
    return out;
}

std::size_t core_index(const CosetTable& t)
{
    return perm16_group_order(generator_perms(t), static_cast<std::size_t>(-2));
}

std::size_t core_index(const SubgroupClass& s) { return s.core_index; }

CosetTable core_table(const CosetTable& t)
{
    const std::vector<Perm16> gens = generator_perms(t);
    const std::vector<Perm16> elems = perm16_group_elements(gens, static_cast<std::size_t>(-2));
    std::unordered_map<Perm16, int, Perm16Hash> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], static_cast<int>(i));

    CosetTable out;
    out.generator_count = t.generator_count;
    out.complete = true;
    out.rows.assign(elems.size(), std::vector<int>(static_cast<std::size_t>(2 * t.generator_count), kNoCoset));
    std::vector<Perm16> image(elems.size());
    for (int g = 0; g < t.generator_count; ++g) {
        perm_then(elems.data(), gens[static_cast<std::size_t>(g)], image.data(), elems.size());
        for (std::size_t e = 0; e < elems.size(); ++e) {
            const int d = index.at(image[e]);
            out.rows[e][static_cast<std::size_t>(2 * g)] = d;
            out.rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(2 * g + 1)] = static_cast<int>(e);
        }
    }
    return standardize(out);
}

GroupPresentation schreier_presentation(const GroupPresentation& p, const CosetTable& t)
{
    const int n = t.coset_count();
    const int g = t.generator_count;
    // BFS spanning tree; tree edges are stored as (coset, generator) pairs
    // read in the positive direction.
    std::vector<std::vector<char>> in_tree(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(g), 0));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> order{0};
    seen[0] = 1;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int c = order[k];
        for (int col = 0; col < 2 * g; ++col) {
            const int d = t.rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
            if (d < 0 || seen[static_cast<std::size_t>(d)])
                continue;
            seen[static_cast<std::size_t>(d)] = 1;
            order.push_back(d);
            if (col % 2 == 0)
                in_tree[static_cast<std::size_t>(c)][static_cast<std::size_t>(col / 2)] = 1;
            else
                in_tree[static_cast<std::size_t>(d)][static_cast<std::size_t>(col / 2)] = 1;
        }
    }

    std::vector<std::vector<int>> gen_id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(g), -1));
    int count = 0;
    for (int c = 0; c < n; ++c)
        for (int x = 0; x < g; ++x)
            if (!in_tree[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)])
                gen_id[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = count++;

    GroupPresentation out;
    out.generator_count = count;
    for (const Word& r : p.relators) {
        for (int c = 0; c < n; ++c) {
            std::vector<int> letters;
            int cur = c;
            for (int x : r.letters()) {
                const int gen = std::abs(x) - 1;
                if (x > 0) {
                    const int id = gen_id[static_cast<std::size_t>(cur)][static_cast<std::size_t>(gen)];
                    if (id >= 0)
                        letters.push_back(id + 1);
                    cur = t.rows[static_cast<std::size_t>(cur)][static_cast<std::size_t>(2 * gen)];
                } else {
                    cur = t.rows[static_cast<std::size_t>(cur)][static_cast<std::size_t>(2 * gen + 1)];
                    const int id = gen_id[static_cast<std::size_t>(cur)][static_cast<std::size_t>(gen)];
                    if (id >= 0)
                        letters.push_back(-(id + 1));
                }
            }
            Word w = cyclically_reduce(Word(std::move(letters)));
            if (!w.empty())
                out.relators.push_back(std::move(w));
        }
    }
    return out;
}

bool FingerprintEntry::operator<(const FingerprintEntry& o) const
{
    if (index != o.index)
        return index < o.index;
    if (core_index != o.core_index)
        return core_index < o.core_index;
    if (subgroup_ab != o.subgroup_ab)
        return subgroup_ab < o.subgroup_ab;
    if (core_ab.has_value() != o.core_ab.has_value())
        return core_ab.has_value();  // SKIPPED sorts last
    return core_ab.has_value() && *core_ab < *o.core_ab;
}

Fingerprint Fingerprint::restricted(int k) const
{
    Fingerprint f;
    f.max_index = std::min(k, max_index);
    f.core_cap = core_cap;
    for (const auto& e : entries)
        if (e.index <= k)
            f.entries.push_back(e);
    return f;
}

Fingerprint fingerprint(const GroupPresentation& p, int max_index, std::size_t core_cap)
{
    Fingerprint f;
    f.max_index = max_index;
    f.core_cap = core_cap;
    for (const SubgroupClass& s : low_index_subgroups(p, max_index)) {
        FingerprintEntry e;
        e.index = s.index;
        e.core_index = s.core_index;
        e.subgroup_ab = abelianization(schreier_presentation(p, s.table));
        if (s.core_index <= core_cap)
            e.core_ab = abelianization(schreier_presentation(p, core_table(s.table)));
        f.entries.push_back(std::move(e));
    }
    std::sort(f.entries.begin(), f.entries.end());
    return f;
}

}  // namespace zsurg
