#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace zsurg {

/// Permutation of at most 16 points stored as a byte table; points beyond
/// the degree are fixed. 16 bytes is exactly one byte-shuffle register.
using Perm16 = std::array<std::uint8_t, 16>;

inline constexpr std::size_t kPerm16Degree = 16;

Perm16 identity_perm16();

struct Perm16Hash {
    std::size_t operator()(const Perm16& p) const noexcept;
};

enum class KernelIsa { Scalar, Ssse3, Avx2, Neon };

std::string_view to_string(KernelIsa isa);

/// Variants compiled in and supported by the running CPU, Scalar first.
std::vector<KernelIsa> available_isas();
/// Best available variant; chosen once per process.
KernelIsa active_isa();

/// out[k][i] = tau[sigma[k][i]]  (apply sigma[k], then tau)
void perm_then(const Perm16* sigma, const Perm16& tau, Perm16* out, std::size_t count);
void perm_then(const Perm16* sigma, const Perm16& tau, Perm16* out, std::size_t count, KernelIsa isa);

/// out[k][i] = pi[k][sigma[k][i]]  (apply sigma[k], then pi[k])
void perm_compose(const Perm16* sigma, const Perm16* pi, Perm16* out, std::size_t count);
void perm_compose(const Perm16* sigma, const Perm16* pi, Perm16* out, std::size_t count, KernelIsa isa);

Perm16 perm_inverse(const Perm16& p);

/// Order of the group generated by `gens`, stopping early once it exceeds
/// `limit` (returns limit + 1 in that case).
std::size_t perm16_group_order(const std::vector<Perm16>& gens, std::size_t limit);

/// Elements of the group generated by `gens`, breadth-first from the
/// identity (products read left to right: apply the earlier factor first).
/// Stops once more than `limit` elements are known.
std::vector<Perm16> perm16_group_elements(const std::vector<Perm16>& gens, std::size_t limit);

}  // namespace zsurg
