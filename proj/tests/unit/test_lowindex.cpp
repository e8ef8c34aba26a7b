#include "doctest.h"

#include <set>

#include "group_catalog.hpp"
#include "hom_oracle.hpp"
#include "test_data.hpp"
#include "zsurg/lowindex.hpp"

using namespace zsurg;

namespace {

std::vector<std::size_t> class_counts(const GroupPresentation& p, int max_index)
{
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_index));
    for (const SubgroupClass& c : low_index_subgroups(p, max_index))
        ++counts[static_cast<std::size_t>(c.index - 1)];
    return counts;
}

// order of the permutation group generated by the table's columns, by
// closing the generators under multiplication with plain vectors
std::size_t closure_order(const CosetTable& t)
{
    using Perm = std::vector<int>;
    std::vector<Perm> gens;
    for (int g = 0; g < t.generator_count; ++g) {
        Perm p;
        for (int x = 0; x < t.coset_count(); ++x)
            p.push_back(t.act(x, g + 1));
        gens.push_back(p);
    }
    Perm id(static_cast<std::size_t>(t.coset_count()));
    for (int x = 0; x < t.coset_count(); ++x)
        id[static_cast<std::size_t>(x)] = x;
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : gens) {
                Perm q(p.size());
                for (std::size_t i = 0; i < p.size(); ++i)
                    q[i] = g[static_cast<std::size_t>(p[i])];
                if (seen.insert(q).second)
                    next.push_back(q);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

GroupPresentation knot_zero_surgery(const char* dt)
{
    return tietze_simplify(zero_surgery_group(wirtinger(realize(parse_dt(dt)))));
}

}  // namespace

TEST_SUITE("lowindex")
{
    TEST_CASE("coset enumeration returns the order of catalog groups")
    {
        for (const auto& g : testdata::finite_groups()) {
            CAPTURE(std::string(g.name));
            const CosetTable t = coset_enumerate(parse_presentation(g.presentation), {});
            CHECK(t.complete);
            CHECK(t.coset_count() == g.order);
        }
    }

    TEST_CASE("coset enumeration over a subgroup gives its index")
    {
        const GroupPresentation s4 = parse_presentation("gens: 2; rel: aa; rel: bbb; rel: abababab");
        CHECK(coset_enumerate(s4, {Word{2}}).coset_count() == 8);
        CHECK(coset_enumerate(s4, {Word{1}}).coset_count() == 12);
        CHECK(coset_enumerate(s4, {Word{1}, Word{2}}).coset_count() == 1);
    }

    TEST_CASE("budget exhaustion is reported, not looped on")
    {
        const GroupPresentation z = parse_presentation("gens: 1");
        try {
            coset_enumerate(z, {}, 500);
            FAIL("infinite group enumerated");
        } catch (const LowIndexError& e) {
            CHECK(e.code() == LowIndexErrc::BudgetExhausted);
        }
        CHECK_THROWS_AS(low_index_subgroups(z, kMaxLowIndex + 1), LowIndexError);
    }

    TEST_CASE("class counts match the homomorphism oracle")
    {
        for (const auto& g : testdata::finite_groups()) {
            CAPTURE(std::string(g.name));
            const GroupPresentation p = parse_presentation(g.presentation);
            CHECK(class_counts(p, 6) == oracle::subgroup_class_profile(p, 6));
        }
        // free group of rank 2
        const GroupPresentation f2 = parse_presentation("gens: 2");
        const std::vector<std::size_t> free_counts{1, 3, 7, 26, 97, 624};
        CHECK(oracle::subgroup_class_profile(f2, 6) == free_counts);
        CHECK(class_counts(f2, 6) == free_counts);
        // knot groups
        for (const char* dt : {"4 6 2", "4 6 8 2"}) {
            const GroupPresentation p = tietze_simplify(wirtinger(realize(parse_dt(dt))));
            CHECK(class_counts(p, 5) == oracle::subgroup_class_profile(p, 5));
        }
    }

    TEST_CASE("core index is the order of the coset action")
    {
        for (const auto& g : testdata::finite_groups()) {
            CAPTURE(std::string(g.name));
            for (const SubgroupClass& c : low_index_subgroups(parse_presentation(g.presentation), 5)) {
                CHECK(c.core_index == closure_order(c.table));
                CHECK(core_index(c.table) == c.core_index);
                CHECK(static_cast<std::size_t>(g.order) % c.core_index == 0);
                const CosetTable core = core_table(c.table);
                CHECK(static_cast<std::size_t>(core.coset_count()) == c.core_index);
            }
        }
    }

    TEST_CASE("Schreier presentations present the subgroup")
    {
        for (const auto& g : testdata::finite_groups()) {
            CAPTURE(std::string(g.name));
            const GroupPresentation p = parse_presentation(g.presentation);
            for (const SubgroupClass& c : low_index_subgroups(p, 4)) {
                const GroupPresentation h = schreier_presentation(p, c.table);
                CHECK(h.generator_count == c.index * (p.generator_count - 1) + 1);
                CHECK(coset_enumerate(tietze_simplify(h), {}).coset_count() == g.order / c.index);
            }
        }
        // index-n subgroups of F2 are free of rank n + 1
        const GroupPresentation f2 = parse_presentation("gens: 2");
        for (const SubgroupClass& c : low_index_subgroups(f2, 4)) {
            const AbelianGroup ab = abelianization(schreier_presentation(f2, c.table));
            CHECK(ab.rank == c.index + 1);
            CHECK(ab.torsion.empty());
        }
    }

    TEST_CASE("classes are sorted, canonical and reproducible")
    {
        const GroupPresentation p = knot_zero_surgery("4 6 8 2");
        const auto a = low_index_subgroups(p, 6);
        const auto b = low_index_subgroups(p, 6);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].table == b[i].table);
            if (i > 0)
                CHECK(a[i - 1].index <= a[i].index);
            CHECK(a[i].table.complete);
        }
    }

    TEST_CASE("fingerprints: restriction, determinism and core cap")
    {
        const GroupPresentation p = knot_zero_surgery("4 6 2");
        const Fingerprint f6 = fingerprint(p, 6);
        CHECK(f6.max_index == 6);
        CHECK(f6.core_cap == kDefaultCoreCap);
        CHECK(f6.restricted(4).same_entries(fingerprint(p, 4)));
        CHECK(fingerprint(p, 6).same_entries(f6));
        CHECK(std::is_sorted(f6.entries.begin(), f6.entries.end()));

        const Fingerprint capped = fingerprint(p, 6, 6);
        REQUIRE(capped.entries.size() == f6.entries.size());
        for (std::size_t i = 0; i < f6.entries.size(); ++i) {
            CHECK(capped.entries[i].subgroup_ab == f6.entries[i].subgroup_ab);
            CHECK(capped.entries[i].core_ab.has_value() == (f6.entries[i].core_index <= 6));
        }
    }

    TEST_CASE("fingerprints ignore the choice of presentation")
    {
        const GroupPresentation p = knot_zero_surgery("4 6 8 2");
        GroupPresentation q = p;
        // rotate and invert relators, then add a redundant consequence
        for (Word& w : q.relators) {
            std::vector<int> l = w.letters();
            std::rotate(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.end());
            w = Word(l).inverse();
        }
        q.relators.push_back(q.relators[0] * q.relators.back());
        CHECK(fingerprint(q, 5).same_entries(fingerprint(p, 5)));
        CHECK(fingerprint(zero_surgery_group(wirtinger(realize(parse_dt("4 6 8 2")))), 4)
                  .same_entries(fingerprint(p, 4)));
    }
}
