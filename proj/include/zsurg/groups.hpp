#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zsurg/bigint.hpp"
#include "zsurg/diagram.hpp"

namespace zsurg {

enum class GroupErrc {
    MissingLongitude,
    BadPresentation,
};

class GroupError : public std::runtime_error {
public:
    GroupError(GroupErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    GroupErrc code() const noexcept { return code_; }

private:
    GroupErrc code_;
};

/// Word in the free group. Letter g+1 is generator g, -(g+1) its inverse.
/// Always freely reduced.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const;
    Word& operator*=(const Word& o);
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    /// Exponent sum of generator g (0-based).
    int exponent_sum(int g) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

Word generator_word(int g, int power = 1);

/// Rotate/reduce until the word is cyclically reduced.
Word cyclically_reduce(const Word& w);

struct GroupPresentation {
    int generator_count = 0;
    std::vector<Word> relators;
    std::optional<Word> meridian;
    std::optional<Word> longitude;

    /// Throws BadPresentation when a letter is out of range.
    void validate() const;
    bool operator==(const GroupPresentation&) const = default;
};

struct AbelianGroup {
    int rank = 0;
    std::vector<BigInt> torsion;  // invariant factors, each >= 2, d_i | d_{i+1}

    bool is_infinite_cyclic() const { return rank == 1 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const AbelianGroup&) const = default;
    auto operator<=>(const AbelianGroup& o) const
    {
        if (auto c = rank <=> o.rank; c != 0)
            return c;
        if (auto c = torsion.size() <=> o.torsion.size(); c != 0)
            return c;
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < o.torsion[i])
                return std::strong_ordering::less;
            if (o.torsion[i] < torsion[i])
                return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
};

/// Text form `gens: n; rel: w; rel: w; ...` with a..z as generators and
/// uppercase letters as inverses. Optional `meridian: w` and `longitude: w`
/// entries carry the peripheral words.
GroupPresentation parse_presentation(std::string_view text);
std::string format_presentation(const GroupPresentation& p);
Word parse_word(std::string_view text, int generator_count);
std::string format_word(const Word& w);

GroupPresentation wirtinger(const KnotDiagram& d);
GroupPresentation zero_surgery_group(const GroupPresentation& p);

struct SmithForm {
    std::vector<BigInt> diagonal;  // nonnegative, divisibility chain, zeros last
    IntMatrix left;                // rows x rows, unimodular
    IntMatrix right;               // cols x cols, unimodular
};

/// Dense Smith normal form with pivoting on the smallest absolute value.
/// Satisfies left * a * right = diag(diagonal) (padded with zeros).
SmithForm smith_normal_form(const IntMatrix& a, bool record_transforms = true);

/// Invariants of Z^cols / rowspace(rows). Unit pivots are eliminated
/// sparsely; the remainder is resolved modulo primes (rank, gcd of maximal
/// minors, local Smith forms) and falls back to exact elimination whenever a
/// step cannot be certified.
AbelianGroup abelian_invariants(const IntMatrix& rows, int cols);

/// Relator exponent matrix: one row per relator, one column per generator.
IntMatrix relator_matrix(const GroupPresentation& p);
AbelianGroup abelianization(const GroupPresentation& p);

inline constexpr int kDefaultTietzeBudget = 2000;

/// Generator eliminations, length-reducing relator substitutions and
/// Nielsen moves g -> gh^{+-1}, h^{+-1}g that shorten the relators, up to
/// `budget` steps. Peripheral words are rewritten along with every move.
GroupPresentation tietze_simplify(const GroupPresentation& p, int budget = kDefaultTietzeBudget);

}  // namespace zsurg
