#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "zsurg/census.hpp"
#include "zsurg/groups.hpp"
#include "zsurg/invariants.hpp"
#include "zsurg/json_io.hpp"
#include "zsurg/lowindex.hpp"
#include "zsurg/obstructions.hpp"

using namespace zsurg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string dt;
    std::string table;
    std::string evidence;
    std::string out;
    std::string presentation;
    int max_index = kDefaultMaxIndex;
    std::size_t max_cosets = kDefaultMaxCosets;
    std::size_t core_cap = kDefaultCoreCap;
    unsigned workers = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int fail(const std::string& kind, const std::string& message, int code)
{
    Json j{{"error", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return code;
}

void emit(const Options& o, const Json& j)
{
    const std::string text = dump(j);
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + o.out);
    f << text;
}

KnotDiagram diagram_from(const Options& o)
{
    return realize(parse_dt(o.dt));
}

/// The presentation argument wins; otherwise the 0-surgery group of --dt.
GroupPresentation presentation_from(const Options& o, bool simplify)
{
    if (!o.presentation.empty()) {
        GroupPresentation p = parse_presentation(o.presentation);
        return simplify ? tietze_simplify(p) : p;
    }
    if (o.dt.empty())
        throw UsageError("either --dt or a presentation is required");
    GroupPresentation p = zero_surgery_group(wirtinger(diagram_from(o)));
    return simplify ? tietze_simplify(p) : p;
}

int cmd_parse(const Options& o)
{
    emit(o, to_json(diagram_from(o)));
    return kExitOk;
}

int cmd_invariants(const Options& o)
{
    emit(o, to_json(classical_invariants(diagram_from(o))));
    return kExitOk;
}

int cmd_fingerprint(const Options& o)
{
    const GroupPresentation p = presentation_from(o, true);
    emit(o, to_json(fingerprint(p, o.max_index, o.core_cap)));
    return kExitOk;
}

int cmd_group(const Options& o)
{
    const GroupPresentation raw = presentation_from(o, false);
    const GroupPresentation simplified = tietze_simplify(raw);
    Json j{{"presentation", format_presentation(raw)},
           {"simplified", format_presentation(simplified)},
           {"abelianization", abelianization(simplified).to_string()}};
    try {
        const CosetTable t = coset_enumerate(simplified, {}, o.max_cosets);
        j["order"] = t.coset_count();
    } catch (const LowIndexError& e) {
        if (e.code() != LowIndexErrc::BudgetExhausted)
            throw;
        j["order"] = "unknown";
    }
    emit(o, j);
    return kExitOk;
}

int cmd_census(const Options& o)
{
    const KnotTable table = load_knot_table(o.table);
    CascadeConfig cfg;
    cfg.max_index = o.max_index;
    cfg.core_cap = o.core_cap;
    cfg.max_cosets = o.max_cosets;
    cfg.workers = o.workers;
    const CensusReport report = run_census(table, cfg);
    emit(o, to_json(report));
    std::cerr << "census: " << report.knots.size() << " knots, " << report.groups.size() << " groups, "
              << report.pairs.size() << " pairs, " << report.distinguished_count() << " distinguished, "
              << report.undetermined_non_mirror().size() << " undetermined non-mirror, " << report.errors.size()
              << " errors, " << report.seconds << " s\n";
    return kExitOk;
}

int cmd_traces(const Options& o)
{
    const std::vector<EvidenceRecord> records = load_evidence(o.evidence);
    Json out = Json::array();
    for (const EvidenceRecord& e : records)
        out.push_back(to_json(derive_verdict(e), e));
    emit(o, out.size() == 1 ? out[0] : out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"0-surgery friends toolkit"};
    app.require_subcommand(1);
    Options o;

    auto positive = CLI::PositiveNumber;

    auto* parse = app.add_subcommand("parse", "Realize a DT code and print the diagram");
    parse->add_option("--dt", o.dt, "DT code, e.g. \"4 6 2\"")->required();

    auto* inv = app.add_subcommand("invariants", "Alexander polynomial, signature, determinant, Arf");
    inv->add_option("--dt", o.dt, "DT code")->required();

    auto* fp = app.add_subcommand("fingerprint", "Low-index fingerprint of a 0-surgery group or presentation");
    fp->add_option("--dt", o.dt, "DT code");
    fp->add_option("presentation", o.presentation, "presentation text, e.g. \"gens: 2; rel: abAB\"");
    fp->add_option("--max-index", o.max_index, "largest subgroup index")->check(CLI::Range(1, kMaxLowIndex));
    fp->add_option("--core-cap", o.core_cap, "largest core index to abelianize")->check(positive);

    auto* grp = app.add_subcommand("group", "Presentation, simplification, abelianization and order");
    grp->add_option("--dt", o.dt, "DT code (0-surgery group)");
    grp->add_option("presentation", o.presentation, "presentation text");
    grp->add_option("--max-cosets", o.max_cosets, "coset budget for the order computation")->check(positive);

    auto* cen = app.add_subcommand("census", "Run the filter cascade over a knot table");
    cen->add_option("--table", o.table, "CSV with columns name,dt")->required();
    cen->add_option("--max-index", o.max_index, "largest subgroup index")->check(CLI::Range(1, kMaxLowIndex));
    cen->add_option("--core-cap", o.core_cap, "largest core index to abelianize")->check(positive);
    cen->add_option("--max-cosets", o.max_cosets, "coset budget")->check(positive);
    cen->add_option("--workers", o.workers, "worker threads")->check(positive);

    auto* tr = app.add_subcommand("traces", "Derive trace verdicts from evidence");
    tr->add_option("--evidence", o.evidence, "evidence JSON (object or array)")->required();

    for (auto* sub : {parse, inv, fp, grp, cen, tr})
        sub->add_option("--out", o.out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*parse)
            return cmd_parse(o);
        if (*inv)
            return cmd_invariants(o);
        if (*fp)
            return cmd_fingerprint(o);
        if (*grp)
            return cmd_group(o);
        if (*cen)
            return cmd_census(o);
        return cmd_traces(o);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const DiagramError& e) {
        return fail(std::string(to_string(e.code())), e.what(), kExitDomain);
    } catch (const GroupError& e) {
        return fail("GroupError", e.what(), kExitDomain);
    } catch (const LowIndexError& e) {
        return fail("LowIndexError", e.what(), kExitDomain);
    } catch (const ContradictionError& e) {
        return fail("ContradictionError", e.what(), kExitDomain);
    } catch (const EvidenceError& e) {
        return fail("EvidenceError", e.what(), kExitDomain);
    } catch (const std::exception& e) {
        return fail("Error", e.what(), kExitDomain);
    }
}
