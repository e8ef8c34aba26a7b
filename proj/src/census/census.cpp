#include "zsurg/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace zsurg {

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn)
{
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

KnotAnalysis analyze(const KnotRecord& record, const CascadeConfig& cfg)
{
    if (record.name.empty())
        throw CensusError("<unnamed>", "empty knot name");
    KnotAnalysis k;
    k.record = record;
    try {
        k.diagram = realize(record.dt);
    } catch (const DiagramError& e) {
        throw CensusError(record.name, std::string(to_string(e.code())) + ": " + e.what());
    }
    k.invariants = classical_invariants(k.diagram);
    k.zero_surgery = tietze_simplify(zero_surgery_group(wirtinger(k.diagram)), cfg.tietze_budget);
    return k;
}

std::string KnotSide::label() const
{
    return (chirality == Chirality::Mirror ? "-" : "") + knot->record.name;
}

int KnotSide::signature() const
{
    return chirality == Chirality::Mirror ? -knot->invariants.signature : knot->invariants.signature;
}

namespace {

bool side_less(const KnotSide& a, const KnotSide& b)
{
    if (a.knot->record.name != b.knot->record.name)
        return a.knot->record.name < b.knot->record.name;
    return a.chirality < b.chirality;
}

}  // namespace

std::vector<CandidateGroup> group_by_alexander(const std::vector<KnotAnalysis>& knots)
{
    std::map<LaurentPolynomial, CandidateGroup> by_key;
    for (const KnotAnalysis& k : knots) {
        CandidateGroup& g = by_key[k.invariants.alexander];
        g.alexander_key = k.invariants.alexander;
        g.members.push_back({&k, Chirality::Given});
        g.members.push_back({&k, Chirality::Mirror});
    }
    std::vector<CandidateGroup> out;
    for (auto& [key, g] : by_key) {
        std::sort(g.members.begin(), g.members.end(), side_less);
        g.singleton = g.members.size() == 2;
        out.push_back(std::move(g));
    }
    return out;
}

MirrorFilter mirror_friend_filter(const KnotAnalysis& k)
{
    return k.invariants.signature != 0 ? MirrorFilter::Excluded : MirrorFilter::Possible;
}

MirrorFilter mirror_friend_filter(const KnotRecord& r)
{
    try {
        return signature(realize(r.dt)) != 0 ? MirrorFilter::Excluded : MirrorFilter::Possible;
    } catch (const DiagramError& e) {
        throw CensusError(r.name, std::string(to_string(e.code())) + ": " + e.what());
    }
}

namespace {

std::optional<std::string> annotation(const KnotRecord& r, const std::string& column)
{
    for (const auto& [k, v] : r.annotations)
        if (k == column)
            return v;
    return std::nullopt;
}

}  // namespace

PairVerdict distinguish_pair(const KnotSide& a, const KnotSide& b, const CascadeConfig& cfg,
                             const FingerprintSource& fingerprints)
{
    PairVerdict v;
    v.a = a;
    v.b = b;
    v.mirror_pair = a.knot->record.name == b.knot->record.name && a.chirality != b.chirality;

    auto differ = [&](const std::string& stage, const std::string& l, const std::string& r) {
        if (l == r)
            return false;
        Certificate c;
        c.stage = stage;
        c.left = l;
        c.right = r;
        v.certificate = std::move(c);
        v.status = PairStatus::Distinguished;
        return true;
    };

    if (differ("signature", std::to_string(a.signature()), std::to_string(b.signature())))
        return v;
    if (differ("determinant", a.knot->invariants.determinant.str(), b.knot->invariants.determinant.str()))
        return v;
    if (differ("arf", std::to_string(a.knot->invariants.arf), std::to_string(b.knot->invariants.arf)))
        return v;

    std::vector<std::string> columns;
    for (const auto& [k, val] : a.knot->record.annotations)
        if (annotation(b.knot->record, k))
            columns.push_back(k);
    std::sort(columns.begin(), columns.end());
    for (const std::string& col : columns)
        if (differ("annotation:" + col, *annotation(a.knot->record, col), *annotation(b.knot->record, col)))
            return v;

    if (a.knot == b.knot)
        return v;  // same group up to isomorphism
    const Fingerprint* fa = fingerprints(*a.knot);
    const Fingerprint* fb = fingerprints(*b.knot);
    if (!fa || !fb) {
        v.notes.push_back("fingerprint unavailable");
        return v;
    }
    for (int k = 2; k <= cfg.max_index; ++k) {
        const Fingerprint ra = fa->restricted(k), rb = fb->restricted(k);
        if (ra.same_entries(rb))
            continue;
        Certificate c;
        c.stage = "fingerprint";
        c.index_bound = k;
        for (const auto& e : ra.entries)
            if (e.index == k)
                c.left_entries.push_back(e);
        for (const auto& e : rb.entries)
            if (e.index == k)
                c.right_entries.push_back(e);
        v.certificate = std::move(c);
        v.status = PairStatus::Distinguished;
        return v;
    }
    return v;
}

PairVerdict distinguish_pair(const KnotSide& a, const KnotSide& b, const CascadeConfig& cfg)
{
    std::map<const KnotAnalysis*, Fingerprint> cache;
    return distinguish_pair(a, b, cfg, [&](const KnotAnalysis& k) -> const Fingerprint* {
        auto it = cache.find(&k);
        if (it == cache.end())
            it = cache.emplace(&k, fingerprint(k.zero_surgery, cfg.max_index, cfg.core_cap)).first;
        return &it->second;
    });
}

std::size_t CensusReport::distinguished_count() const
{
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairVerdict& p) {
        return p.status == PairStatus::Distinguished;
    }));
}

std::vector<const PairVerdict*> CensusReport::undetermined_non_mirror() const
{
    std::vector<const PairVerdict*> out;
    for (const auto& p : pairs)
        if (p.status == PairStatus::Undetermined && !p.mirror_pair)
            out.push_back(&p);
    return out;
}

CensusReport run_census(const KnotTable& table, const CascadeConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    CensusReport report;
    report.config = cfg;
    report.errors = table.errors;

    const std::size_t n = table.records.size();
    std::vector<std::unique_ptr<KnotAnalysis>> slots(n);
    std::vector<std::string> failures(n);
    parallel_for(n, cfg.workers, [&](std::size_t i) {
        try {
            slots[i] = std::make_unique<KnotAnalysis>(analyze(table.records[i], cfg));
        } catch (const CensusError& e) {
            failures[i] = e.what();
        } catch (const std::exception& e) {
            failures[i] = table.records[i].name + ": " + e.what();
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (slots[i])
            report.knots.push_back(std::move(slots[i]));
        else
            report.errors.emplace_back(table.records[i].name, failures[i]);
    }

    // Group on pointers to the owned analyses.
    std::map<LaurentPolynomial, CandidateGroup> by_key;
    for (const auto& k : report.knots) {
        CandidateGroup& g = by_key[k->invariants.alexander];
        g.alexander_key = k->invariants.alexander;
        g.members.push_back({k.get(), Chirality::Given});
        g.members.push_back({k.get(), Chirality::Mirror});
    }
    for (auto& [key, g] : by_key) {
        std::sort(g.members.begin(), g.members.end(), side_less);
        g.singleton = g.members.size() == 2;
        report.groups.push_back(std::move(g));
    }

    // Pairs with the first side in its given chirality; (-A,-B) mirrors (A,B).
    struct Job {
        KnotSide a, b;
    };
    std::vector<Job> jobs;
    for (const auto& g : report.groups)
        for (std::size_t i = 0; i < g.members.size(); ++i)
            for (std::size_t j = 0; j < g.members.size(); ++j) {
                const KnotSide& a = g.members[i];
                const KnotSide& b = g.members[j];
                if (a.chirality != Chirality::Given)
                    continue;
                if (a.knot == b.knot ? b.chirality != Chirality::Mirror : !side_less(a, b))
                    continue;
                jobs.push_back({a, b});
            }

    // Fingerprints only for records whose pairs survive the cheap stages.
    std::map<const KnotAnalysis*, std::size_t> need;
    for (const Job& job : jobs) {
        if (job.a.knot == job.b.knot)
            continue;
        const PairVerdict v = distinguish_pair(job.a, job.b, cfg, [](const KnotAnalysis&) -> const Fingerprint* {
            return nullptr;
        });
        if (v.status == PairStatus::Undetermined) {
            need.emplace(job.a.knot, 0);
            need.emplace(job.b.knot, 0);
        }
    }
    std::vector<const KnotAnalysis*> todo;
    for (auto& [k, slot] : need) {
        slot = todo.size();
        todo.push_back(k);
    }
    std::vector<std::optional<Fingerprint>> prints(todo.size());
    std::vector<std::string> print_errors(todo.size());
    parallel_for(todo.size(), cfg.workers, [&](std::size_t i) {
        try {
            prints[i] = fingerprint(todo[i]->zero_surgery, cfg.max_index, cfg.core_cap);
        } catch (const std::exception& e) {
            print_errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < todo.size(); ++i)
        if (!prints[i])
            report.errors.emplace_back(todo[i]->record.name, "fingerprint: " + print_errors[i]);

    const FingerprintSource lookup = [&](const KnotAnalysis& k) -> const Fingerprint* {
        auto it = need.find(&k);
        if (it == need.end() || !prints[it->second])
            return nullptr;
        return &*prints[it->second];
    };
    for (const Job& job : jobs)
        report.pairs.push_back(distinguish_pair(job.a, job.b, cfg, lookup));

    std::sort(report.errors.begin(), report.errors.end());
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace zsurg
