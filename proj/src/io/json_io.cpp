#include "zsurg/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace zsurg {

Json to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Json to_json(const LaurentPolynomial& p)
{
    Json coeffs = Json::array();
    for (const BigInt& c : p.coefficients())
        coeffs.push_back(to_json(c));
    return Json{{"min", p.is_zero() ? 0 : p.min_exponent()}, {"coeffs", coeffs}};
}

Json to_json(const KnotDiagram& d)
{
    Json crossings = Json::array();
    for (const Crossing& c : d.crossings())
        crossings.push_back({{"odd", c.first}, {"even", c.second}, {"over", c.first_over ? "odd" : "even"},
                             {"sign", c.sign}});
    Json arcs = Json::array();
    for (const Arc& a : d.arcs())
        arcs.push_back(Json::array({a.start, a.end}));
    return Json{{"dt", serialize(d.to_dt())},
                {"crossingCount", d.crossing_count()},
                {"writhe", writhe(d)},
                {"crossings", crossings},
                {"arcs", arcs},
                {"faceCount", d.faces().size()}};
}

Json to_json(const ClassicalInvariants& inv)
{
    return Json{{"alexander", to_json(inv.alexander)},
                {"signature", inv.signature},
                {"determinant", to_json(inv.determinant)},
                {"arf", inv.arf}};
}

Json to_json(const AbelianGroup& g)
{
    Json factors = Json::array();
    for (const BigInt& t : g.torsion)
        factors.push_back(to_json(t));
    return Json::array({g.rank, factors});
}

Json to_json(const Fingerprint& f)
{
    Json entries = Json::array();
    for (const FingerprintEntry& e : f.entries)
        entries.push_back(Json::array({e.index, e.core_index, to_json(e.subgroup_ab),
                                       e.core_ab ? to_json(*e.core_ab) : Json("SKIPPED")}));
    return Json{{"maxIndex", f.max_index}, {"coreCap", f.core_cap}, {"entries", entries}};
}

namespace {

std::string_view status_name(PairStatus s)
{
    return s == PairStatus::Distinguished ? "DISTINGUISHED" : "UNDETERMINED";
}

Json certificate_json(const Certificate& c)
{
    Json j{{"stage", c.stage}};
    if (c.stage == "fingerprint") {
        j["indexBound"] = c.index_bound;
        auto side = [](const std::vector<FingerprintEntry>& entries) {
            Fingerprint f;
            f.entries = entries;
            return to_json(f)["entries"];
        };
        j["left"] = side(c.left_entries);
        j["right"] = side(c.right_entries);
    } else {
        j["left"] = c.left;
        j["right"] = c.right;
    }
    return j;
}

}  // namespace

Json to_json(const CensusReport& r)
{
    Json config{{"maxIndex", r.config.max_index},
                {"coreCap", r.config.core_cap},
                {"maxCosets", r.config.max_cosets},
                {"tietzeBudget", r.config.tietze_budget}};

    Json groups = Json::array();
    for (const CandidateGroup& g : r.groups) {
        Json members = Json::array();
        for (const KnotSide& s : g.members)
            members.push_back(s.label());
        groups.push_back({{"alexander", to_json(g.alexander_key)}, {"members", members}, {"singleton", g.singleton}});
    }

    Json pairs = Json::array();
    std::size_t undetermined = 0, undetermined_mirror = 0;
    for (const PairVerdict& p : r.pairs) {
        Json j{{"pair", Json::array({p.a.label(), p.b.label()})},
               {"mirrorPair", p.mirror_pair},
               {"status", status_name(p.status)}};
        if (p.certificate)
            j["certificate"] = certificate_json(*p.certificate);
        if (!p.notes.empty())
            j["notes"] = p.notes;
        if (p.status == PairStatus::Undetermined)
            ++(p.mirror_pair ? undetermined_mirror : undetermined);
        pairs.push_back(std::move(j));
    }

    Json errors = Json::array();
    for (const auto& [record, message] : r.errors)
        errors.push_back({{"record", record}, {"error", message}});

    return Json{{"config", config},
                {"summary",
                 {{"knots", r.knots.size()},
                  {"groups", r.groups.size()},
                  {"pairs", r.pairs.size()},
                  {"distinguished", r.distinguished_count()},
                  {"undetermined", undetermined},
                  {"undeterminedMirror", undetermined_mirror},
                  {"errors", r.errors.size()}}},
                {"groups", groups},
                {"pairs", pairs},
                {"errors", errors}};
}

Json to_json(const ParityWitness& w)
{
    Json j{{"type", to_string(w.kind)}};
    switch (w.kind) {
    case WitnessKind::Rbg:
        j["family"] = w.rbg.family;
        j["params"] = w.rbg.params;
        break;
    case WitnessKind::Annulus:
        j["pres"] = w.annulus.presentation;
        j["m"] = w.annulus.m;
        j["n1"] = w.annulus.n1;
        j["n2"] = w.annulus.n2;
        break;
    case WitnessKind::Declared:
        j["parity"] = to_string(w.declared_parity);
        j["extendsSmoothly"] = w.declared_smooth;
        if (!w.source.empty())
            j["source"] = w.source;
        break;
    }
    return j;
}

Json to_json(const EvidenceRecord& e)
{
    Json j{{"pair", e.pair}};
    if (e.arf)
        j["arf"] = *e.arf;
    if (!e.zero_not_se.empty()) {
        Json z = Json::object();
        for (const auto& [k, form] : e.zero_not_se)
            z[k] = to_string(form);
        j["zeroNotSE"] = z;
    }
    Json ws = Json::array();
    for (const auto& w : e.witnesses)
        ws.push_back(to_json(w));
    j["witnesses"] = ws;
    return j;
}

Json to_json(const TraceVerdict& v, const EvidenceRecord& e)
{
    return Json{{"pair", e.pair}, {"level", to_string(v.level)}, {"justification", v.justification}};
}

namespace {

template <typename T>
T required(const Json& j, const char* key)
{
    if (!j.contains(key))
        throw EvidenceError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw EvidenceError(std::string("field '") + key + "' has the wrong type");
    }
}

ParityWitness witness_from_json(const Json& j)
{
    if (!j.is_object())
        throw EvidenceError("witness must be an object");
    const std::string type = required<std::string>(j, "type");
    if (type == "rbg") {
        RbgSource s;
        s.family = required<std::string>(j, "family");
        const auto params = required<std::vector<long long>>(j, "params");
        if (params.size() != 6)
            throw EvidenceError("rbg witness needs six parameters (a,b,c,d,e,f)");
        std::copy(params.begin(), params.end(), s.params.begin());
        return ParityWitness::from_rbg(std::move(s));
    }
    if (type == "annulus") {
        AnnulusSource s;
        s.presentation = required<std::string>(j, "pres");
        s.m = required<long long>(j, "m");
        s.n1 = required<long long>(j, "n1");
        s.n2 = required<long long>(j, "n2");
        return ParityWitness::from_annulus(std::move(s));
    }
    if (type == "declared") {
        const std::string parity = required<std::string>(j, "parity");
        if (parity != "EVEN" && parity != "ODD")
            throw EvidenceError("declared parity must be EVEN or ODD");
        const bool smooth = j.contains("extendsSmoothly") ? required<bool>(j, "extendsSmoothly") : false;
        const std::string source = j.contains("source") ? required<std::string>(j, "source") : "";
        return ParityWitness::declared(parity == "EVEN" ? Parity::Even : Parity::Odd, smooth, source);
    }
    throw EvidenceError("unknown witness type '" + type + "'");
}

}  // namespace

EvidenceRecord evidence_from_json(const Json& j)
{
    if (!j.is_object())
        throw EvidenceError("evidence record must be an object");
    EvidenceRecord e;
    const auto pair = required<std::vector<std::string>>(j, "pair");
    if (pair.size() != 2)
        throw EvidenceError("pair must have two entries");
    e.pair = {pair[0], pair[1]};
    if (j.contains("arf"))
        e.arf = required<int>(j, "arf");
    if (j.contains("zeroNotSE")) {
        const Json& z = j.at("zeroNotSE");
        if (!z.is_object())
            throw EvidenceError("zeroNotSE must be an object");
        for (const auto& [knot, form] : z.items()) {
            if (!form.is_string())
                throw EvidenceError("zeroNotSE values must be strings");
            const auto parsed = parse_zero_not_se(form.get<std::string>());
            if (!parsed)
                throw EvidenceError("unknown zeroNotSE form '" + form.get<std::string>() + "'");
            e.zero_not_se.emplace(knot, *parsed);
        }
    }
    if (j.contains("witnesses")) {
        if (!j.at("witnesses").is_array())
            throw EvidenceError("witnesses must be an array");
        for (const Json& w : j.at("witnesses"))
            e.witnesses.push_back(witness_from_json(w));
    }
    e.validate();
    return e;
}

std::vector<EvidenceRecord> evidence_list_from_json(const Json& j)
{
    std::vector<EvidenceRecord> out;
    if (j.is_array()) {
        for (const Json& r : j)
            out.push_back(evidence_from_json(r));
    } else {
        out.push_back(evidence_from_json(j));
    }
    return out;
}

std::vector<EvidenceRecord> load_evidence(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw EvidenceError("cannot open " + path);
    try {
        return evidence_list_from_json(Json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw EvidenceError(path + ": " + e.what());
    }
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace zsurg
