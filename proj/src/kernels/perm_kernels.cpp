#include "zsurg/perm_kernels.hpp"

#include <cstring>
#include <unordered_map>

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define ZSURG_X86 1
#include <immintrin.h>
#endif
#if defined(__aarch64__) && defined(__ARM_NEON)
#define ZSURG_NEON 1
#include <arm_neon.h>
#endif

namespace zsurg {

Perm16 identity_perm16()
{
    Perm16 p{};
    for (std::uint8_t i = 0; i < 16; ++i)
        p[i] = i;
    return p;
}

std::size_t Perm16Hash::operator()(const Perm16& p) const noexcept
{
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, p.data(), 8);
    std::memcpy(&hi, p.data() + 8, 8);
    return static_cast<std::size_t>(lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2)));
}

std::string_view to_string(KernelIsa isa)
{
    switch (isa) {
    case KernelIsa::Scalar: return "scalar";
    case KernelIsa::Ssse3: return "ssse3";
    case KernelIsa::Avx2: return "avx2";
    case KernelIsa::Neon: return "neon";
    }
    return "?";
}

namespace {

void then_scalar(const Perm16* sigma, const Perm16& tau, Perm16* out, std::size_t count)
{
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < 16; ++i)
            out[k][i] = tau[sigma[k][i] & 15];
}

void compose_scalar(const Perm16* sigma, const Perm16* pi, Perm16* out, std::size_t count)
{
    for (std::size_t k = 0; k < count; ++k) {
        Perm16 r;
        for (std::size_t i = 0; i < 16; ++i)
            r[i] = pi[k][sigma[k][i] & 15];
        out[k] = r;
    }
}

#ifdef ZSURG_X86
__attribute__((target("ssse3"))) void then_ssse3(const Perm16* sigma, const Perm16& tau, Perm16* out,
                                                 std::size_t count)
{
    const __m128i t = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tau.data()));
    for (std::size_t k = 0; k < count; ++k) {
        const __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(sigma[k].data()));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out[k].data()), _mm_shuffle_epi8(t, s));
    }
}

__attribute__((target("ssse3"))) void compose_ssse3(const Perm16* sigma, const Perm16* pi, Perm16* out,
                                                    std::size_t count)
{
    for (std::size_t k = 0; k < count; ++k) {
        const __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(sigma[k].data()));
        const __m128i p = _mm_loadu_si128(reinterpret_cast<const __m128i*>(pi[k].data()));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out[k].data()), _mm_shuffle_epi8(p, s));
    }
}

// vpshufb shuffles within each 128-bit lane, so one register holds two
// independent permutations.
__attribute__((target("avx2"))) void then_avx2(const Perm16* sigma, const Perm16& tau, Perm16* out,
                                               std::size_t count)
{
    const __m128i t1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tau.data()));
    const __m256i t = _mm256_broadcastsi128_si256(t1);
    std::size_t k = 0;
    for (; k + 2 <= count; k += 2) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sigma[k].data()));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[k].data()), _mm256_shuffle_epi8(t, s));
    }
    for (; k < count; ++k) {
        const __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(sigma[k].data()));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out[k].data()), _mm_shuffle_epi8(t1, s));
    }
}

__attribute__((target("avx2"))) void compose_avx2(const Perm16* sigma, const Perm16* pi, Perm16* out,
                                                  std::size_t count)
{
    std::size_t k = 0;
    for (; k + 2 <= count; k += 2) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sigma[k].data()));
        const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pi[k].data()));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[k].data()), _mm256_shuffle_epi8(p, s));
    }
    for (; k < count; ++k) {
        const __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(sigma[k].data()));
        const __m128i p = _mm_loadu_si128(reinterpret_cast<const __m128i*>(pi[k].data()));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out[k].data()), _mm_shuffle_epi8(p, s));
    }
}
#endif

#ifdef ZSURG_NEON
void then_neon(const Perm16* sigma, const Perm16& tau, Perm16* out, std::size_t count)
{
    const uint8x16_t t = vld1q_u8(tau.data());
    for (std::size_t k = 0; k < count; ++k)
        vst1q_u8(out[k].data(), vqtbl1q_u8(t, vld1q_u8(sigma[k].data())));
}

void compose_neon(const Perm16* sigma, const Perm16* pi, Perm16* out, std::size_t count)
{
    for (std::size_t k = 0; k < count; ++k)
        vst1q_u8(out[k].data(), vqtbl1q_u8(vld1q_u8(pi[k].data()), vld1q_u8(sigma[k].data())));
}
#endif

bool supported(KernelIsa isa)
{
    switch (isa) {
    case KernelIsa::Scalar: return true;
#ifdef ZSURG_X86
    case KernelIsa::Ssse3: return __builtin_cpu_supports("ssse3");
    case KernelIsa::Avx2: return __builtin_cpu_supports("avx2");
#endif
#ifdef ZSURG_NEON
    case KernelIsa::Neon: return true;
#endif
    default: return false;
    }
}

}  // namespace

std::vector<KernelIsa> available_isas()
{
    std::vector<KernelIsa> out;
    for (KernelIsa isa : {KernelIsa::Scalar, KernelIsa::Ssse3, KernelIsa::Avx2, KernelIsa::Neon})
        if (supported(isa))
            out.push_back(isa);
    return out;
}

KernelIsa active_isa()
{
    static const KernelIsa chosen = available_isas().back();
    return chosen;
}

void perm_then(const Perm16* sigma, const Perm16& tau, Perm16* out, std::size_t count, KernelIsa isa)
{
    switch (isa) {
#ifdef ZSURG_X86
    case KernelIsa::Ssse3: then_ssse3(sigma, tau, out, count); return;
    case KernelIsa::Avx2: then_avx2(sigma, tau, out, count); return;
#endif
#ifdef ZSURG_NEON
    case KernelIsa::Neon: then_neon(sigma, tau, out, count); return;
#endif
    default: then_scalar(sigma, tau, out, count); return;
    }
}

void perm_compose(const Perm16* sigma, const Perm16* pi, Perm16* out, std::size_t count, KernelIsa isa)
{
    switch (isa) {
#ifdef ZSURG_X86
    case KernelIsa::Ssse3: compose_ssse3(sigma, pi, out, count); return;
    case KernelIsa::Avx2: compose_avx2(sigma, pi, out, count); return;
#endif
#ifdef ZSURG_NEON
    case KernelIsa::Neon: compose_neon(sigma, pi, out, count); return;
#endif
    default: compose_scalar(sigma, pi, out, count); return;
    }
}

void perm_then(const Perm16* sigma, const Perm16& tau, Perm16* out, std::size_t count)
{
    perm_then(sigma, tau, out, count, active_isa());
}

void perm_compose(const Perm16* sigma, const Perm16* pi, Perm16* out, std::size_t count)
{
    perm_compose(sigma, pi, out, count, active_isa());
}

Perm16 perm_inverse(const Perm16& p)
{
    Perm16 r{};
    for (std::uint8_t i = 0; i < 16; ++i)
        r[p[i] & 15] = i;
    return r;
}

std::vector<Perm16> perm16_group_elements(const std::vector<Perm16>& gens, std::size_t limit)
{
    std::vector<Perm16> elems{identity_perm16()};
    std::unordered_map<Perm16, std::size_t, Perm16Hash> index{{elems[0], 0}};
    std::vector<Perm16> scratch;
    std::size_t frontier = 0;
    while (frontier < elems.size()) {
        const std::size_t end = elems.size();
        scratch.resize(end - frontier);
        for (const Perm16& g : gens) {
            perm_then(elems.data() + frontier, g, scratch.data(), end - frontier);
            for (const Perm16& p : scratch)
                if (index.emplace(p, elems.size()).second) {
                    elems.push_back(p);
                    if (elems.size() > limit)
                        return elems;
                }
        }
        frontier = end;
    }
    return elems;
}

std::size_t perm16_group_order(const std::vector<Perm16>& gens, std::size_t limit)
{
    return perm16_group_elements(gens, limit).size();
}

}  // namespace zsurg
