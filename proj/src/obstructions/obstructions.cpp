#include "zsurg/obstructions.hpp"

#include <algorithm>

namespace zsurg {

std::string_view to_string(Parity p)
{
    return p == Parity::Even ? "EVEN" : "ODD";
}

std::string_view to_string(WitnessKind k)
{
    switch (k) {
    case WitnessKind::Rbg: return "rbg";
    case WitnessKind::Annulus: return "annulus";
    case WitnessKind::Declared: return "declared";
    }
    return "?";
}

namespace {

Parity parity_of(long long v)
{
    return v % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string strip_sign(const std::string& s)
{
    return !s.empty() && s[0] == '-' ? s.substr(1) : s;
}

}  // namespace

Parity witness_parity(const RbgSource& s)
{
    return parity_of(s.params[0] + s.params[1]);
}

Parity witness_parity(const AnnulusSource& s)
{
    return parity_of(s.n1 - s.n2);
}

ParityWitness ParityWitness::from_rbg(RbgSource s)
{
    ParityWitness w;
    w.kind = WitnessKind::Rbg;
    w.rbg = std::move(s);
    return w;
}

ParityWitness ParityWitness::from_annulus(AnnulusSource s)
{
    ParityWitness w;
    w.kind = WitnessKind::Annulus;
    w.annulus = std::move(s);
    return w;
}

ParityWitness ParityWitness::declared(Parity p, bool extends_smoothly, std::string source)
{
    ParityWitness w;
    w.kind = WitnessKind::Declared;
    w.declared_parity = p;
    w.declared_smooth = extends_smoothly;
    w.source = std::move(source);
    return w;
}

Parity ParityWitness::parity() const
{
    switch (kind) {
    case WitnessKind::Rbg: return witness_parity(rbg);
    case WitnessKind::Annulus: return witness_parity(annulus);
    case WitnessKind::Declared: return declared_parity;
    }
    return declared_parity;
}

bool ParityWitness::extends_smoothly() const
{
    switch (kind) {
    case WitnessKind::Rbg: return rbg.params[0] + rbg.params[1] == 0;
    case WitnessKind::Annulus: return parity() == Parity::Even;
    case WitnessKind::Declared: return declared_smooth;
    }
    return false;
}

void ParityWitness::validate() const
{
    switch (kind) {
    case WitnessKind::Rbg:
        if (rbg.family != "L1" && rbg.family != "L2" && rbg.family != "L3")
            throw EvidenceError("unknown RBG family '" + rbg.family + "'");
        break;
    case WitnessKind::Annulus:
        if (annulus.presentation != "L1" && annulus.presentation != "L2")
            throw EvidenceError("unknown annulus presentation '" + annulus.presentation + "'");
        break;
    case WitnessKind::Declared:
        if (declared_smooth && declared_parity == Parity::Odd)
            throw EvidenceError("an odd witness cannot extend to a trace diffeomorphism");
        break;
    }
}

std::string ParityWitness::describe() const
{
    std::string out;
    switch (kind) {
    case WitnessKind::Rbg:
        out = "rbg " + rbg.family + "(";
        for (std::size_t i = 0; i < rbg.params.size(); ++i)
            out += (i ? "," : "") + std::to_string(rbg.params[i]);
        out += ")";
        break;
    case WitnessKind::Annulus:
        out = "annulus " + annulus.presentation + " m=" + std::to_string(annulus.m) + " n=" +
              std::to_string(annulus.n1) + "->" + std::to_string(annulus.n2);
        break;
    case WitnessKind::Declared:
        out = "declared";
        if (!source.empty())
            out += " " + source;
        break;
    }
    return out + " " + std::string(to_string(parity()));
}

std::string_view to_string(ZeroNotSeForm f)
{
    return f == ZeroNotSeForm::AsymmetricBoth ? "asymmetric-both" : "not-symmetry-exceptional";
}

std::optional<ZeroNotSeForm> parse_zero_not_se(std::string_view s)
{
    if (s == "asymmetric-both")
        return ZeroNotSeForm::AsymmetricBoth;
    if (s == "not-symmetry-exceptional")
        return ZeroNotSeForm::NotSymmetryExceptional;
    return std::nullopt;
}

void EvidenceRecord::validate() const
{
    for (const auto& id : pair)
        if (strip_sign(id).empty())
            throw EvidenceError("empty knot identifier in pair");
    if (arf && *arf != 0 && *arf != 1)
        throw EvidenceError("arf must be 0 or 1");
    for (const auto& [knot, form] : zero_not_se)
        if (strip_sign(knot) != strip_sign(pair[0]) && strip_sign(knot) != strip_sign(pair[1]))
            throw EvidenceError("zeroNotSE names '" + knot + "', which is not in the pair");
    for (const auto& w : witnesses)
        w.validate();
}

std::string_view to_string(TraceLevel l)
{
    switch (l) {
    case TraceLevel::Unknown: return "UNKNOWN";
    case TraceLevel::NotHomeomorphic: return "NOT_HOMEOMORPHIC";
    case TraceLevel::Homeomorphic: return "HOMEOMORPHIC";
    case TraceLevel::Diffeomorphic: return "DIFFEOMORPHIC";
    }
    return "?";
}

std::optional<TraceLevel> parse_trace_level(std::string_view s)
{
    for (TraceLevel l : {TraceLevel::Unknown, TraceLevel::NotHomeomorphic, TraceLevel::Homeomorphic,
                         TraceLevel::Diffeomorphic})
        if (to_string(l) == s)
            return l;
    return std::nullopt;
}

bool at_least(TraceLevel have, TraceLevel want)
{
    if (want == TraceLevel::Unknown || have == want)
        return true;
    return have == TraceLevel::Diffeomorphic && want == TraceLevel::Homeomorphic;
}

TraceVerdict derive_verdict(const EvidenceRecord& e)
{
    e.validate();
    TraceVerdict v;

    const auto even_smooth = std::find_if(e.witnesses.begin(), e.witnesses.end(), [](const ParityWitness& w) {
        return w.parity() == Parity::Even && w.extends_smoothly();
    });
    const auto even = std::find_if(e.witnesses.begin(), e.witnesses.end(), [](const ParityWitness& w) {
        return w.parity() == Parity::Even;
    });
    const auto odd = std::find_if(e.witnesses.begin(), e.witnesses.end(), [](const ParityWitness& w) {
        return w.parity() == Parity::Odd;
    });

    if (even_smooth != e.witnesses.end()) {
        v.level = TraceLevel::Diffeomorphic;
        v.justification.push_back("even-smooth-witness: " + even_smooth->describe());
    }
    if (even != e.witnesses.end()) {
        if (v.level == TraceLevel::Unknown)
            v.level = TraceLevel::Homeomorphic;
        v.justification.push_back("even-witness: " + even->describe());
    }
    if (e.arf == 1) {
        if (v.level == TraceLevel::Unknown)
            v.level = TraceLevel::Homeomorphic;
        v.justification.push_back("arf-one");
    }
    if (odd != e.witnesses.end() && !e.zero_not_se.empty()) {
        const auto& [knot, form] = *e.zero_not_se.begin();
        const std::string rule = "odd-witness-same-parity: " + odd->describe() + "; " + knot + " " +
                                 std::string(to_string(form));
        if (v.level != TraceLevel::Unknown)
            throw ContradictionError(e.pair[0] + " / " + e.pair[1] + ": " + rule + " contradicts " +
                                     v.justification.front());
        v.level = TraceLevel::NotHomeomorphic;
        v.justification.push_back(rule);
    }
    return v;
}

}  // namespace zsurg
