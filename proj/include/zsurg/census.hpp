#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zsurg/diagram.hpp"
#include "zsurg/groups.hpp"
#include "zsurg/invariants.hpp"
#include "zsurg/lowindex.hpp"

namespace zsurg {

class CensusError : public std::runtime_error {
public:
    CensusError(std::string record, const std::string& what)
        : std::runtime_error(record + ": " + what), record_(std::move(record)) {}
    const std::string& record() const noexcept { return record_; }

private:
    std::string record_;
};

enum class Chirality { Given, Mirror };

struct CascadeConfig {
    int max_index = kDefaultMaxIndex;
    std::size_t core_cap = kDefaultCoreCap;
    std::size_t max_cosets = kDefaultMaxCosets;
    int tietze_budget = kDefaultTietzeBudget;
    unsigned workers = 1;
};

/// Everything the cascade needs about one record, for the chirality of
/// its code. The mirror shares the fingerprint (the groups are isomorphic).
struct KnotAnalysis {
    KnotRecord record;
    KnotDiagram diagram;
    ClassicalInvariants invariants;
    GroupPresentation zero_surgery;  // simplified
};

/// Throws CensusError carrying the record name.
KnotAnalysis analyze(const KnotRecord& record, const CascadeConfig& cfg = {});

struct KnotSide {
    const KnotAnalysis* knot = nullptr;
    Chirality chirality = Chirality::Given;

    std::string label() const;  // "name" or "-name"
    int signature() const;
};

struct CandidateGroup {
    LaurentPolynomial alexander_key;
    std::vector<KnotSide> members;  // sorted by (name, chirality)
    bool singleton = false;         // members come from a single record
};

std::vector<CandidateGroup> group_by_alexander(const std::vector<KnotAnalysis>& knots);

enum class MirrorFilter { Possible, Excluded };
MirrorFilter mirror_friend_filter(const KnotAnalysis& k);
MirrorFilter mirror_friend_filter(const KnotRecord& r);

enum class PairStatus { Distinguished, Undetermined };

struct Certificate {
    std::string stage;  // signature, determinant, arf, annotation:<col>, fingerprint
    int index_bound = 0;  // fingerprint stage only
    std::vector<FingerprintEntry> left_entries, right_entries;  // fingerprint stage only
    std::string left, right;  // other stages
};

struct PairVerdict {
    KnotSide a, b;
    bool mirror_pair = false;
    PairStatus status = PairStatus::Undetermined;
    std::optional<Certificate> certificate;
    std::vector<std::string> notes;  // e.g. a fingerprint that could not be computed
};

using FingerprintSource = std::function<const Fingerprint*(const KnotAnalysis&)>;

/// Cascade: signature, determinant, arf, shared annotation columns, then
/// fingerprints at index bounds 2..max_index. `fingerprints` may return
/// null when a fingerprint is unavailable; the pair then stays UNDETERMINED.
PairVerdict distinguish_pair(const KnotSide& a, const KnotSide& b, const CascadeConfig& cfg,
                             const FingerprintSource& fingerprints);

/// Convenience form computing fingerprints on demand.
PairVerdict distinguish_pair(const KnotSide& a, const KnotSide& b, const CascadeConfig& cfg);

struct CensusReport {
    CascadeConfig config;
    std::vector<CandidateGroup> groups;
    std::vector<PairVerdict> pairs;
    std::vector<std::pair<std::string, std::string>> errors;  // (record, message)
    std::vector<std::unique_ptr<KnotAnalysis>> knots;  // owns what groups/pairs point to
    double seconds = 0;  // wall time; not part of the JSON report

    std::size_t distinguished_count() const;
    std::vector<const PairVerdict*> undetermined_non_mirror() const;
};

CensusReport run_census(const KnotTable& table, const CascadeConfig& cfg);

/// Runs fn(i) for i in [0, n) on `workers` threads. Output slots must be
/// preallocated by the caller so results do not depend on scheduling.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace zsurg
