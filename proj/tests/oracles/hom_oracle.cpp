#include "hom_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

using Perm = std::vector<int>;

std::vector<Perm> symmetric_group(int d)
{
    std::vector<Perm> all;
    Perm p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    do
        all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return all;
}

struct Search {
    const zsurg::GroupPresentation& pres;
    int d;
    std::vector<Perm> sym;
    std::vector<Perm> images, inverses;
    // relators grouped by the largest generator they mention
    std::vector<std::vector<const zsurg::Word*>> ready;
    std::size_t centralizer_sum = 0;

    int image(int point, const zsurg::Word& w) const
    {
        for (int letter : w.letters()) {
            const std::size_t g = static_cast<std::size_t>(std::abs(letter) - 1);
            point = letter > 0 ? images[g][static_cast<std::size_t>(point)]
                               : inverses[g][static_cast<std::size_t>(point)];
        }
        return point;
    }

    bool relators_hold(int upto) const
    {
        for (const zsurg::Word* w : ready[static_cast<std::size_t>(upto)])
            for (int x = 0; x < d; ++x)
                if (image(x, *w) != x)
                    return false;
        return true;
    }

    bool transitive() const
    {
        std::vector<char> seen(static_cast<std::size_t>(d));
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (std::size_t g = 0; g < images.size(); ++g)
                for (int y : {images[g][static_cast<std::size_t>(x)], inverses[g][static_cast<std::size_t>(x)]})
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        ++count;
                        stack.push_back(y);
                    }
        }
        return count == d;
    }

    std::size_t centralizer() const
    {
        std::size_t count = 0;
        for (const Perm& c : sym) {
            bool commutes = true;
            for (std::size_t g = 0; g < images.size() && commutes; ++g)
                for (int x = 0; x < d && commutes; ++x)
                    commutes = c[static_cast<std::size_t>(images[g][static_cast<std::size_t>(x)])] ==
                               images[g][static_cast<std::size_t>(c[static_cast<std::size_t>(x)])];
            count += commutes;
        }
        return count;
    }

    void run(int g)
    {
        if (g == pres.generator_count) {
            if (transitive())
                centralizer_sum += centralizer();
            return;
        }
        for (const Perm& s : sym) {
            images[static_cast<std::size_t>(g)] = s;
            Perm inv(s.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                inv[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
            inverses[static_cast<std::size_t>(g)] = inv;
            if (relators_hold(g))
                run(g + 1);
        }
    }
};

}  // namespace

std::size_t subgroup_classes_by_homs(const zsurg::GroupPresentation& p, int d)
{
    if (d < 1 || d > 7)
        throw std::invalid_argument("degree out of range");
    Search s{p, d, symmetric_group(d), {}, {}, {}, 0};
    const std::size_t gens = static_cast<std::size_t>(p.generator_count);
    s.images.assign(gens, {});
    s.inverses.assign(gens, {});
    s.ready.assign(std::max<std::size_t>(gens, 1), {});
    for (const zsurg::Word& w : p.relators) {
        int top = 0;
        for (int letter : w.letters())
            top = std::max(top, std::abs(letter) - 1);
        s.ready[static_cast<std::size_t>(top)].push_back(&w);
    }
    if (gens == 0)
        return d == 1 ? 1 : 0;
    s.run(0);
    const std::size_t order = s.sym.size();
    if (s.centralizer_sum % order != 0)
        throw std::logic_error("orbit count is not integral");
    return s.centralizer_sum / order;
}

std::vector<std::size_t> subgroup_class_profile(const zsurg::GroupPresentation& p, int max_index)
{
    std::vector<std::size_t> out;
    for (int d = 1; d <= max_index; ++d)
        out.push_back(subgroup_classes_by_homs(p, d));
    return out;
}

}  // namespace oracle
