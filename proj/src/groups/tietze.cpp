#include <algorithm>
#include <set>

#include "zsurg/groups.hpp"

namespace zsurg {

namespace {

// Least rotation of w or its inverse; identifies relators that define the
// same normal closure element up to conjugacy and inversion.
std::vector<int> cyclic_key(const Word& w)
{
    std::vector<int> best;
    const Word inv = w.inverse();
    for (const Word* v : {&w, &inv}) {
        const auto& l = v->letters();
        for (std::size_t r = 0; r < l.size(); ++r) {
            std::vector<int> rot(l.begin() + static_cast<std::ptrdiff_t>(r), l.end());
            rot.insert(rot.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(r));
            if (best.empty() || rot < best)
                best = std::move(rot);
        }
    }
    return best;
}

void normalize_relators(GroupPresentation& p)
{
    std::vector<Word> kept;
    std::set<std::vector<int>> seen;
    for (const Word& r : p.relators) {
        Word c = cyclically_reduce(r);
        if (c.empty())
            continue;
        if (seen.insert(cyclic_key(c)).second)
            kept.push_back(std::move(c));
    }
    std::stable_sort(kept.begin(), kept.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    p.relators = std::move(kept);
}

Word substitute(const Word& w, int g, const Word& image)
{
    Word out;
    const Word inv = image.inverse();
    for (int x : w.letters()) {
        if (x == g + 1)
            out *= image;
        else if (x == -(g + 1))
            out *= inv;
        else
            out *= Word{x > g + 1 ? x - 1 : (x < -(g + 1) ? x + 1 : x)};
    }
    return out;
}

// Image letters must also be renumbered once g disappears.
Word renumber(const Word& w, int g)
{
    std::vector<int> l;
    l.reserve(w.size());
    for (int x : w.letters())
        l.push_back(x > g + 1 ? x - 1 : (x < -(g + 1) ? x + 1 : x));
    return Word(std::move(l));
}

bool eliminate_generator(GroupPresentation& p)
{
    int best_rel = -1, best_gen = -1;
    std::size_t best_cost = 0;
    std::vector<std::size_t> occurrences(static_cast<std::size_t>(p.generator_count));
    for (const Word& r : p.relators)
        for (int x : r.letters())
            ++occurrences[static_cast<std::size_t>(std::abs(x) - 1)];

    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const Word& r = p.relators[i];
        std::vector<int> count(static_cast<std::size_t>(p.generator_count));
        for (int x : r.letters())
            ++count[static_cast<std::size_t>(std::abs(x) - 1)];
        for (int g = 0; g < p.generator_count; ++g) {
            if (count[static_cast<std::size_t>(g)] != 1)
                continue;
            const std::size_t cost = (r.size() - 1) * (occurrences[static_cast<std::size_t>(g)] - 1);
            if (best_rel < 0 || cost < best_cost) {
                best_rel = static_cast<int>(i);
                best_gen = g;
                best_cost = cost;
            }
        }
    }
    if (best_rel < 0)
        return false;

    // r = u g^e v  =>  g^e = u^-1 v^-1  =>  g = (v u)^-e
    const auto& l = p.relators[static_cast<std::size_t>(best_rel)].letters();
    std::size_t at = 0;
    while (std::abs(l[at]) != best_gen + 1)
        ++at;
    const int e = l[at] > 0 ? 1 : -1;
    Word vu(std::vector<int>(l.begin() + static_cast<std::ptrdiff_t>(at) + 1, l.end()));
    vu *= Word(std::vector<int>(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(at)));
    const Word image = renumber(e > 0 ? vu.inverse() : vu, best_gen);

    std::vector<Word> rels;
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        if (static_cast<int>(i) != best_rel)
            rels.push_back(substitute(p.relators[i], best_gen, image));
    p.relators = std::move(rels);
    if (p.meridian)
        p.meridian = substitute(*p.meridian, best_gen, image);
    if (p.longitude)
        p.longitude = substitute(*p.longitude, best_gen, image);
    --p.generator_count;
    return true;
}

std::vector<int> rotate(const std::vector<int>& l, std::size_t r)
{
    std::vector<int> out(l.begin() + static_cast<std::ptrdiff_t>(r), l.end());
    out.insert(out.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(r));
    return out;
}

// Replace a piece u of some relator s by v^-1 where r = u v is a cyclic
// conjugate of a shorter relator and |u| > |v|.
bool substitute_once(GroupPresentation& p)
{
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const Word& r = p.relators[i];
        const std::size_t len = r.size();
        if (len < 2)
            continue;
        const Word rinv = r.inverse();
        for (const Word* base : {&r, &rinv}) {
            for (std::size_t rot = 0; rot < len; ++rot) {
                const std::vector<int> rr = rotate(base->letters(), rot);
                for (std::size_t ulen = len; ulen * 2 > len; --ulen) {
                    const std::vector<int> u(rr.begin(), rr.begin() + static_cast<std::ptrdiff_t>(ulen));
                    const Word vinv = Word(std::vector<int>(rr.begin() + static_cast<std::ptrdiff_t>(ulen), rr.end())).inverse();
                    for (std::size_t j = 0; j < p.relators.size(); ++j) {
                        if (j == i || p.relators[j].size() < ulen)
                            continue;
                        const auto& s = p.relators[j].letters();
                        for (std::size_t start = 0; start < s.size(); ++start) {
                            bool match = true;
                            for (std::size_t k = 0; k < ulen && match; ++k)
                                match = s[(start + k) % s.size()] == u[k];
                            if (!match)
                                continue;
                            std::vector<int> rotated = rotate(s, start);
                            Word rest(std::vector<int>(rotated.begin() + static_cast<std::ptrdiff_t>(ulen), rotated.end()));
                            Word replaced = cyclically_reduce(vinv * rest);
                            if (replaced.size() >= s.size())
                                continue;
                            p.relators[j] = std::move(replaced);
                            return true;
                        }
                    }
                }
            }
        }
    }
    return false;
}

// Word with every g replaced by g h^e (right) or h^e g (left), h != g.
Word nielsen(const Word& w, int g, int h, int e, bool right)
{
    const Word hw = generator_word(h, e);
    const Word gw = generator_word(g);
    const Word image = right ? gw * hw : hw * gw;
    const Word inv = image.inverse();
    Word out;
    for (int x : w.letters()) {
        if (x == g + 1)
            out *= image;
        else if (x == -(g + 1))
            out *= inv;
        else
            out *= Word{x};
    }
    return out;
}

std::size_t total_length(const std::vector<Word>& rels)
{
    std::size_t n = 0;
    for (const Word& r : rels)
        n += r.size();
    return n;
}

// Apply the automorphism of the free group that shortens the relators the
// most, if any does.
bool shorten_by_nielsen(GroupPresentation& p)
{
    const std::size_t before = total_length(p.relators);
    std::size_t best = before;
    int bg = -1, bh = -1, be = 0;
    bool bright = false;
    for (int g = 0; g < p.generator_count; ++g)
        for (int h = 0; h < p.generator_count; ++h) {
            if (g == h)
                continue;
            for (int e : {1, -1})
                for (bool right : {true, false}) {
                    std::size_t len = 0;
                    for (const Word& r : p.relators) {
                        len += cyclically_reduce(nielsen(r, g, h, e, right)).size();
                        if (len >= best)
                            break;
                    }
                    if (len < best) {
                        best = len;
                        bg = g;
                        bh = h;
                        be = e;
                        bright = right;
                    }
                }
        }
    if (bg < 0)
        return false;
    for (Word& r : p.relators)
        r = nielsen(r, bg, bh, be, bright);
    if (p.meridian)
        p.meridian = nielsen(*p.meridian, bg, bh, be, bright);
    if (p.longitude)
        p.longitude = nielsen(*p.longitude, bg, bh, be, bright);
    return true;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& input, int budget)
{
    input.validate();
    GroupPresentation p = input;
    normalize_relators(p);
    for (int step = 0; step < budget; ++step) {
        if (eliminate_generator(p) || substitute_once(p) || shorten_by_nielsen(p)) {
            normalize_relators(p);
            continue;
        }
        break;
    }
    return p;
}

}  // namespace zsurg
