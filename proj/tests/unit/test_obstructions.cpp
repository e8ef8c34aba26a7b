#include "doctest.h"

#include "test_data.hpp"
#include "zsurg/json_io.hpp"
#include "zsurg/obstructions.hpp"

using namespace zsurg;

namespace {

ParityWitness rbg(long long a, long long b)
{
    return ParityWitness::from_rbg(RbgSource{"L1", {a, b, 0, 1, 0, 0}});
}

ParityWitness annulus(long long n1, long long n2)
{
    return ParityWitness::from_annulus(AnnulusSource{"L1", -3, n1, n2});
}

EvidenceRecord record(std::vector<ParityWitness> ws, std::optional<int> arf = std::nullopt, bool not_se = false)
{
    EvidenceRecord e;
    e.pair = {"A", "-B"};
    e.arf = arf;
    e.witnesses = std::move(ws);
    if (not_se)
        e.zero_not_se.emplace("A", ZeroNotSeForm::AsymmetricBoth);
    return e;
}

const std::vector<TraceLevel> kLevels{TraceLevel::Unknown, TraceLevel::NotHomeomorphic, TraceLevel::Homeomorphic,
                                      TraceLevel::Diffeomorphic};

}  // namespace

TEST_SUITE("obstructions")
{
    TEST_CASE("witness parity arithmetic")
    {
        for (long long a = -6; a <= 6; ++a)
            for (long long b = -6; b <= 6; ++b) {
                const Parity expect = ((a + b) & 1) == 0 ? Parity::Even : Parity::Odd;
                CHECK(witness_parity(RbgSource{"L2", {a, b, 0, 0, 0, 0}}) == expect);
                CHECK(witness_parity(AnnulusSource{"L2", 0, a, b}) == ((a - b) & 1 ? Parity::Odd : Parity::Even));
            }
        CHECK(rbg(-2, 2).extends_smoothly());
        CHECK_FALSE(rbg(1, 1).extends_smoothly());
        CHECK(rbg(1, 1).parity() == Parity::Even);
        CHECK(annulus(0, 2).extends_smoothly());
        CHECK_FALSE(annulus(0, 1).extends_smoothly());
    }

    TEST_CASE("verdict rules")
    {
        CHECK(derive_verdict(record({})).level == TraceLevel::Unknown);
        CHECK(derive_verdict(record({rbg(-1, 1)})).level == TraceLevel::Diffeomorphic);
        CHECK(derive_verdict(record({rbg(1, 1)})).level == TraceLevel::Homeomorphic);
        CHECK(derive_verdict(record({}, 1)).level == TraceLevel::Homeomorphic);
        CHECK(derive_verdict(record({}, 0)).level == TraceLevel::Unknown);
        CHECK(derive_verdict(record({annulus(0, 1)})).level == TraceLevel::Unknown);
        CHECK(derive_verdict(record({annulus(0, 1)}, std::nullopt, true)).level == TraceLevel::NotHomeomorphic);
        CHECK(derive_verdict(record({}, std::nullopt, true)).level == TraceLevel::Unknown);

        const TraceVerdict both = derive_verdict(record({rbg(-1, 1), rbg(2, 2)}, 1));
        CHECK(both.level == TraceLevel::Diffeomorphic);
        CHECK(both.justification.size() == 3);
        CHECK(both.justification[0].rfind("even-smooth-witness", 0) == 0);
    }

    TEST_CASE("an obstruction next to a positive rule is a contradiction")
    {
        CHECK_THROWS_AS(derive_verdict(record({annulus(0, 1), rbg(0, 0)}, std::nullopt, true)), ContradictionError);
        CHECK_THROWS_AS(derive_verdict(record({annulus(0, 1)}, 1, true)), ContradictionError);
    }

    TEST_CASE("more positive evidence never lowers the verdict")
    {
        const std::vector<ParityWitness> pool{rbg(1, 1), rbg(-2, 2), annulus(0, 2), annulus(1, 1),
                                              ParityWitness::declared(Parity::Even, true, "piccirillo-friend")};
        for (std::size_t mask = 0; mask < (1u << pool.size()); ++mask) {
            std::vector<ParityWitness> ws;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask >> i & 1)
                    ws.push_back(pool[i]);
            for (std::optional<int> arf : {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{1}}) {
                const TraceLevel base = derive_verdict(record(ws, arf)).level;
                for (const ParityWitness& extra : pool) {
                    auto more = ws;
                    more.push_back(extra);
                    CHECK(at_least(derive_verdict(record(more, arf)).level, base));
                }
                auto with_arf = record(ws, 1);
                CHECK(at_least(derive_verdict(with_arf).level, base));
            }
        }
    }

    TEST_CASE("the order on verdicts")
    {
        for (TraceLevel l : kLevels) {
            CHECK(at_least(l, l));
            CHECK(at_least(l, TraceLevel::Unknown));
            CHECK(parse_trace_level(to_string(l)) == l);
        }
        CHECK(at_least(TraceLevel::Diffeomorphic, TraceLevel::Homeomorphic));
        CHECK_FALSE(at_least(TraceLevel::Homeomorphic, TraceLevel::Diffeomorphic));
        CHECK_FALSE(at_least(TraceLevel::NotHomeomorphic, TraceLevel::Homeomorphic));
        CHECK_FALSE(at_least(TraceLevel::Diffeomorphic, TraceLevel::NotHomeomorphic));
        CHECK_FALSE(parse_trace_level("C0"));
        // transitivity
        for (TraceLevel a : kLevels)
            for (TraceLevel b : kLevels)
                for (TraceLevel c : kLevels)
                    if (at_least(a, b) && at_least(b, c))
                        CHECK(at_least(a, c));
    }

    TEST_CASE("validation")
    {
        CHECK_THROWS_AS(ParityWitness::from_rbg(RbgSource{"L9", {}}).validate(), EvidenceError);
        CHECK_THROWS_AS(ParityWitness::from_annulus(AnnulusSource{"L3", 0, 0, 1}).validate(), EvidenceError);
        CHECK_THROWS_AS(ParityWitness::declared(Parity::Odd, true, "").validate(), EvidenceError);
        EvidenceRecord e = record({});
        e.arf = 2;
        CHECK_THROWS_AS(e.validate(), EvidenceError);
        e = record({});
        e.zero_not_se.emplace("C", ZeroNotSeForm::NotSymmetryExceptional);
        CHECK_THROWS_AS(e.validate(), EvidenceError);
        e = record({});
        e.zero_not_se.emplace("B", ZeroNotSeForm::NotSymmetryExceptional);  // sign is ignored
        CHECK_NOTHROW(e.validate());
    }

    TEST_CASE("the worked example replays as NOT_HOMEOMORPHIC")
    {
        const auto records = load_evidence(testdata::data_path("example_not_homeomorphic.json"));
        REQUIRE(records.size() == 1);
        const TraceVerdict v = derive_verdict(records[0]);
        CHECK(v.level == TraceLevel::NotHomeomorphic);
        REQUIRE(v.justification.size() == 1);
        CHECK(v.justification[0].rfind("odd-witness-same-parity", 0) == 0);
    }
}
