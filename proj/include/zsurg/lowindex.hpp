#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zsurg/groups.hpp"

namespace zsurg {

enum class LowIndexErrc {
    BudgetExhausted,
    IndexTooLarge,
};

class LowIndexError : public std::runtime_error {
public:
    LowIndexError(LowIndexErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    LowIndexErrc code() const noexcept { return code_; }

private:
    LowIndexErrc code_;
};

inline constexpr int kNoCoset = -1;

/// Column 2g is generator g, column 2g+1 its inverse. Coset 0 is the
/// subgroup itself.
struct CosetTable {
    int generator_count = 0;
    std::vector<std::vector<int>> rows;
    bool complete = false;

    int coset_count() const noexcept { return static_cast<int>(rows.size()); }
    int act(int coset, int letter) const;  // letter as in Word
    int act(int coset, const Word& w) const;
    bool operator==(const CosetTable&) const = default;
};

inline constexpr std::size_t kDefaultMaxCosets = 1000000;

/// Coset enumeration (HLT with deduction processing, lookahead when the
/// table fills). Throws BudgetExhausted when more than `max_cosets` live
/// cosets would be needed; that outcome means "unknown", not "infinite".
CosetTable coset_enumerate(const GroupPresentation& p, const std::vector<Word>& subgroup_generators,
                           std::size_t max_cosets = kDefaultMaxCosets);

struct SubgroupClass {
    int index = 0;
    CosetTable table;
    std::size_t core_index = 0;
};

/// Largest index the search supports (permutations are 16-byte tables).
inline constexpr int kMaxLowIndex = 16;
inline constexpr int kDefaultMaxIndex = 7;
inline constexpr std::size_t kDefaultCoreCap = 720;

/// One representative per conjugacy class of subgroups with index <=
/// max_index, ordered by (index, table).
std::vector<SubgroupClass> low_index_subgroups(const GroupPresentation& p, int max_index);

/// Order of the permutation group induced on the cosets.
std::size_t core_index(const CosetTable& t);
std::size_t core_index(const SubgroupClass& s);

/// Reidemeister-Schreier presentation of the stabiliser of coset 0.
GroupPresentation schreier_presentation(const GroupPresentation& p, const CosetTable& t);

/// Coset table of the core: the regular action of the permutation group
/// induced by `t`.
CosetTable core_table(const CosetTable& t);

struct FingerprintEntry {
    int index = 0;
    std::size_t core_index = 0;
    AbelianGroup subgroup_ab;
    std::optional<AbelianGroup> core_ab;  // empty = SKIPPED

    bool operator==(const FingerprintEntry&) const = default;
    bool operator<(const FingerprintEntry& o) const;
};

struct Fingerprint {
    int max_index = 0;
    std::size_t core_cap = 0;
    std::vector<FingerprintEntry> entries;  // sorted

    /// Entries with index <= k, as a fingerprint at that bound.
    Fingerprint restricted(int k) const;
    bool same_entries(const Fingerprint& o) const { return entries == o.entries; }
};

Fingerprint fingerprint(const GroupPresentation& p, int max_index = kDefaultMaxIndex,
                        std::size_t core_cap = kDefaultCoreCap);

}  // namespace zsurg
