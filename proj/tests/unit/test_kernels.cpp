#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "zsurg/perm_kernels.hpp"

using namespace zsurg;

namespace {

Perm16 shuffled(std::mt19937& rng, int degree)
{
    Perm16 p = identity_perm16();
    std::shuffle(p.begin(), p.begin() + degree, rng);
    return p;
}

Perm16 from_cycle(std::initializer_list<int> cycle)
{
    Perm16 p = identity_perm16();
    const std::vector<int> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i)
        p[static_cast<std::size_t>(c[i])] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
    return p;
}

}  // namespace

TEST_SUITE("kernels")
{
    TEST_CASE("scalar variant is always available and listed first")
    {
        const auto isas = available_isas();
        REQUIRE(!isas.empty());
        CHECK(isas.front() == KernelIsa::Scalar);
        CHECK(std::find(isas.begin(), isas.end(), active_isa()) != isas.end());
        for (KernelIsa isa : isas)
            MESSAGE("kernel variant available: " << to_string(isa));
    }

    TEST_CASE("every variant agrees with the definition")
    {
        std::mt19937 rng(42);
        // odd batch sizes exercise the tails of the vector loops
        for (std::size_t count : {0u, 1u, 2u, 3u, 7u, 31u, 64u, 257u}) {
            std::vector<Perm16> sigma(count), pi(count);
            for (std::size_t k = 0; k < count; ++k) {
                sigma[k] = shuffled(rng, 16);
                pi[k] = shuffled(rng, 1 + static_cast<int>(rng() % 16));
            }
            const Perm16 tau = shuffled(rng, 16);

            std::vector<Perm16> want_then(count), want_compose(count);
            for (std::size_t k = 0; k < count; ++k)
                for (std::size_t i = 0; i < 16; ++i) {
                    want_then[k][i] = tau[sigma[k][i]];
                    want_compose[k][i] = pi[k][sigma[k][i]];
                }

            for (KernelIsa isa : available_isas()) {
                CAPTURE(to_string(isa));
                std::vector<Perm16> out(count);
                perm_then(sigma.data(), tau, out.data(), count, isa);
                CHECK(out == want_then);
                perm_compose(sigma.data(), pi.data(), out.data(), count, isa);
                CHECK(out == want_compose);
            }
            std::vector<Perm16> out(count);
            perm_then(sigma.data(), tau, out.data(), count);
            CHECK(out == want_then);
        }
    }

    TEST_CASE("in-place composition is allowed")
    {
        std::mt19937 rng(3);
        std::vector<Perm16> a(9);
        for (auto& p : a)
            p = shuffled(rng, 16);
        const Perm16 tau = shuffled(rng, 16);
        for (KernelIsa isa : available_isas()) {
            std::vector<Perm16> in = a, want(a.size());
            perm_then(a.data(), tau, want.data(), a.size(), KernelIsa::Scalar);
            perm_then(in.data(), tau, in.data(), in.size(), isa);
            CHECK(in == want);
        }
    }

    TEST_CASE("inverse")
    {
        std::mt19937 rng(8);
        for (int trial = 0; trial < 100; ++trial) {
            const Perm16 p = shuffled(rng, 16);
            const Perm16 q = perm_inverse(p);
            Perm16 out;
            perm_compose(&p, &q, &out, 1);
            CHECK(out == identity_perm16());
        }
    }

    TEST_CASE("group orders from generators")
    {
        CHECK(perm16_group_order({}, 100) == 1);
        CHECK(perm16_group_order({from_cycle({0, 1, 2, 3, 4})}, 100) == 5);
        // S_n from a transposition and an n-cycle
        CHECK(perm16_group_order({from_cycle({0, 1}), from_cycle({0, 1, 2, 3, 4})}, 1000) == 120);
        CHECK(perm16_group_order({from_cycle({0, 1}), from_cycle({0, 1, 2, 3, 4, 5})}, 1000) == 720);
        // A_5 from a 3-cycle and a 5-cycle
        CHECK(perm16_group_order({from_cycle({0, 1, 2}), from_cycle({0, 1, 2, 3, 4})}, 1000) == 60);
        // the limit stops the search early
        CHECK(perm16_group_order({from_cycle({0, 1}), from_cycle({0, 1, 2, 3, 4, 5, 6})}, 100) == 101);

        const auto elements = perm16_group_elements({from_cycle({0, 1}), from_cycle({0, 1, 2, 3})}, 1000);
        CHECK(elements.size() == 24);
        CHECK(elements.front() == identity_perm16());
        CHECK(std::set<Perm16>(elements.begin(), elements.end()).size() == 24);
    }
}
