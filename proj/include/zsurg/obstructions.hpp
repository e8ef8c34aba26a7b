#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zsurg {

enum class Parity { Even, Odd };
std::string_view to_string(Parity p);

enum class WitnessKind { Rbg, Annulus, Declared };
std::string_view to_string(WitnessKind k);

/// Special RBG link L_family(a,b,c,d,e,f).
struct RbgSource {
    std::string family;  // L1, L2 or L3
    std::array<long long, 6> params{};
    bool operator==(const RbgSource&) const = default;
};

/// Annulus twist K_{n1}^m -> K_{n2}^m on a flat annulus presentation.
struct AnnulusSource {
    std::string presentation;  // L1 or L2
    long long m = 0, n1 = 0, n2 = 0;
    bool operator==(const AnnulusSource&) const = default;
};

Parity witness_parity(const RbgSource& s);      // parity of a+b
Parity witness_parity(const AnnulusSource& s);  // parity of n1-n2

class EvidenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParityWitness {
    WitnessKind kind = WitnessKind::Declared;
    RbgSource rbg;          // kind == Rbg
    AnnulusSource annulus;  // kind == Annulus
    Parity declared_parity = Parity::Even;  // kind == Declared
    bool declared_smooth = false;           // kind == Declared
    std::string source;  // free-form provenance for declared witnesses

    static ParityWitness from_rbg(RbgSource s);
    static ParityWitness from_annulus(AnnulusSource s);
    static ParityWitness declared(Parity p, bool extends_smoothly, std::string source);

    Parity parity() const;
    /// RBG with a+b = 0, annulus twist with an even difference, or declared.
    bool extends_smoothly() const;
    /// Throws EvidenceError on an unknown family or a smooth odd declaration.
    void validate() const;
    std::string describe() const;

    bool operator==(const ParityWitness&) const = default;
};

/// How "0 is not a symmetry-exceptional slope" was established for a knot.
enum class ZeroNotSeForm { AsymmetricBoth, NotSymmetryExceptional };
std::string_view to_string(ZeroNotSeForm f);
std::optional<ZeroNotSeForm> parse_zero_not_se(std::string_view s);

struct EvidenceRecord {
    std::array<std::string, 2> pair;
    std::optional<int> arf;
    std::map<std::string, ZeroNotSeForm> zero_not_se;  // keyed by pair entry
    std::vector<ParityWitness> witnesses;

    void validate() const;
    bool operator==(const EvidenceRecord&) const = default;
};

/// UNKNOWN < NOT_HOMEOMORPHIC, UNKNOWN < HOMEOMORPHIC < DIFFEOMORPHIC.
enum class TraceLevel { Unknown, NotHomeomorphic, Homeomorphic, Diffeomorphic };
std::string_view to_string(TraceLevel l);
std::optional<TraceLevel> parse_trace_level(std::string_view s);
bool at_least(TraceLevel have, TraceLevel want);

struct TraceVerdict {
    TraceLevel level = TraceLevel::Unknown;
    std::vector<std::string> justification;
    bool operator==(const TraceVerdict&) const = default;
};

/// Rules in precedence order:
///   even-smooth-witness   -> DIFFEOMORPHIC
///   even-witness          -> HOMEOMORPHIC
///   arf-one               -> HOMEOMORPHIC
///   odd-witness-same-parity (needs a zero_not_se declaration) -> NOT_HOMEOMORPHIC
/// The justification lists every rule that fired. A positive rule firing
/// together with the obstruction throws ContradictionError.
TraceVerdict derive_verdict(const EvidenceRecord& e);

}  // namespace zsurg
