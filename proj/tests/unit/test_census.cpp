#include "doctest.h"

#include <atomic>
#include <set>

#include "test_data.hpp"
#include "zsurg/census.hpp"
#include "zsurg/json_io.hpp"

using namespace zsurg;

namespace {

const char* kSmallTable = "name,dt\n"
                          "3_1,4 6 2\n"
                          "4_1,4 6 8 2\n"
                          "6_1,4 8 12 10 2 6\n"
                          "9_46,4 10 -14 -12 -16 2 -6 -18 -8\n"
                          "bad_syntax,4 x 2\n"
                          "bad_planar,4 6 8 10 2\n";

CascadeConfig small_config(unsigned workers)
{
    CascadeConfig cfg;
    cfg.max_index = 4;
    cfg.workers = workers;
    return cfg;
}

KnotAnalysis analysis_of(const std::string& name, const std::string& dt)
{
    return analyze(KnotRecord{name, parse_dt(dt), {}, {}, {}, {}});
}

}  // namespace

TEST_SUITE("census")
{
    TEST_CASE("parallel_for visits every index once for any worker count")
    {
        for (unsigned workers : {0u, 1u, 2u, 3u, 8u}) {
            for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{17}, std::size_t{200}}) {
                std::vector<std::atomic<int>> hits(n);
                parallel_for(n, workers, [&](std::size_t i) { hits[i].fetch_add(1); });
                for (std::size_t i = 0; i < n; ++i)
                    CHECK(hits[i].load() == 1);
            }
        }
    }

    TEST_CASE("grouping by Alexander polynomial")
    {
        std::vector<KnotAnalysis> knots;
        knots.push_back(analysis_of("9_46", "4 10 -14 -12 -16 2 -6 -18 -8"));
        knots.push_back(analysis_of("3_1", "4 6 2"));
        knots.push_back(analysis_of("6_1", "4 8 12 10 2 6"));
        const auto groups = group_by_alexander(knots);
        REQUIRE(groups.size() == 2);
        std::size_t members = 0;
        for (const auto& g : groups) {
            members += g.members.size();
            for (const auto& m : g.members)
                CHECK(m.knot->invariants.alexander == g.alexander_key);
            for (std::size_t i = 0; i + 1 < g.members.size(); ++i)
                CHECK(std::pair(g.members[i].knot->record.name, g.members[i].chirality)
                      < std::pair(g.members[i + 1].knot->record.name, g.members[i + 1].chirality));
            // each record appears with both chiralities
            std::set<std::string> labels;
            for (const auto& m : g.members)
                labels.insert(m.label());
            for (const auto& m : g.members) {
                const std::string name = m.knot->record.name;
                CHECK(labels.count(name) == 1);
                CHECK(labels.count("-" + name) == 1);
            }
        }
        CHECK(members == 2 * knots.size());
        CHECK(groups[0].singleton != groups[1].singleton);
    }

    TEST_CASE("the mirror filter follows the signature")
    {
        const KnotAnalysis trefoil = analysis_of("3_1", "4 6 2");
        const KnotAnalysis eight = analysis_of("4_1", "4 6 8 2");
        CHECK(mirror_friend_filter(trefoil) == MirrorFilter::Excluded);
        CHECK(mirror_friend_filter(eight) == MirrorFilter::Possible);
        CHECK(mirror_friend_filter(trefoil.record) == MirrorFilter::Excluded);
        KnotRecord broken{"broken", parse_dt("4 6 8 10 2"), {}, {}, {}, {}};
        CHECK_THROWS_AS(mirror_friend_filter(broken), CensusError);
        const auto table = load_knot_table(testdata::data_path("prime_knots_le9.csv"));
        for (const auto& r : table.records) {
            const KnotAnalysis k = analyze(r);
            CHECK(mirror_friend_filter(k) == mirror_friend_filter(r));
            CHECK((mirror_friend_filter(k) == MirrorFilter::Excluded) == (k.invariants.signature != 0));
        }
    }

    TEST_CASE("distinguish_pair does not depend on the order of its arguments")
    {
        const KnotAnalysis trefoil = analysis_of("3_1", "4 6 2");
        const KnotAnalysis six = analysis_of("6_1", "4 8 12 10 2 6");
        const KnotAnalysis nine = analysis_of("9_46", "4 10 -14 -12 -16 2 -6 -18 -8");
        const CascadeConfig cfg = small_config(1);
        const std::vector<KnotSide> sides{{&trefoil, Chirality::Given}, {&trefoil, Chirality::Mirror},
                                          {&six, Chirality::Given},     {&six, Chirality::Mirror},
                                          {&nine, Chirality::Given},    {&nine, Chirality::Mirror}};
        for (const auto& a : sides)
            for (const auto& b : sides) {
                if (a.knot == b.knot && a.chirality == b.chirality)
                    continue;
                const PairVerdict ab = distinguish_pair(a, b, cfg);
                const PairVerdict ba = distinguish_pair(b, a, cfg);
                CAPTURE(a.label());
                CAPTURE(b.label());
                CHECK(ab.status == ba.status);
                CHECK(ab.mirror_pair == ba.mirror_pair);
                CHECK(ab.mirror_pair == (a.knot == b.knot));
                if (ab.certificate && ba.certificate)
                    CHECK(ab.certificate->stage == ba.certificate->stage);
            }
        // signature separates the trefoil from its mirror
        const PairVerdict t = distinguish_pair(sides[0], sides[1], cfg);
        CHECK(t.status == PairStatus::Distinguished);
        REQUIRE(t.certificate);
        CHECK(t.certificate->stage == "signature");
    }

    TEST_CASE("a missing fingerprint leaves the pair undetermined")
    {
        const KnotAnalysis six = analysis_of("6_1", "4 8 12 10 2 6");
        const KnotAnalysis nine = analysis_of("9_46", "4 10 -14 -12 -16 2 -6 -18 -8");
        const PairVerdict v = distinguish_pair({&six, Chirality::Given}, {&nine, Chirality::Given}, small_config(1),
                                               [](const KnotAnalysis&) -> const Fingerprint* { return nullptr; });
        CHECK(v.status == PairStatus::Undetermined);
        CHECK_FALSE(v.certificate);
    }

    TEST_CASE("census reports are identical across worker counts")
    {
        const KnotTable table = read_knot_table(kSmallTable);
        const CensusReport one = run_census(table, small_config(1));
        const CensusReport two = run_census(table, small_config(2));
        const std::string a = dump(to_json(one));
        CHECK(a == dump(to_json(two)));
        CHECK(a == dump(to_json(run_census(table, small_config(1)))));

        CHECK(one.knots.size() == 4);
        std::set<std::string> failed;
        for (const auto& [name, msg] : one.errors)
            failed.insert(name);
        CHECK(failed == std::set<std::string>{"bad_syntax", "bad_planar"});

        // 6_1 and 9_46 share an Alexander polynomial; the fingerprint separates them.
        bool found = false;
        for (const auto& p : one.pairs) {
            if (p.a.label() == "6_1" && p.b.label() == "9_46") {
                found = true;
                CHECK(p.status == PairStatus::Distinguished);
                REQUIRE(p.certificate);
                CHECK(p.certificate->stage == "fingerprint");
            }
        }
        CHECK(found);
        CHECK(one.undetermined_non_mirror().empty());
        for (const auto& p : one.pairs)
            if (p.status == PairStatus::Undetermined)
                CHECK(p.mirror_pair);
    }
}
