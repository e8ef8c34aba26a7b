#include <algorithm>
#include <cctype>
#include <sstream>

#include "zsurg/groups.hpp"

namespace zsurg {

Word::Word(std::vector<int> letters)
{
    letters_.reserve(letters.size());
    for (int x : letters) {
        if (x == 0)
            throw GroupError(GroupErrc::BadPresentation, "letter 0 is not a generator");
        if (!letters_.empty() && letters_.back() == -x)
            letters_.pop_back();
        else
            letters_.push_back(x);
    }
}

Word Word::inverse() const
{
    Word r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.letters_.push_back(-*it);
    return r;
}

Word& Word::operator*=(const Word& o)
{
    for (int x : o.letters_) {
        if (!letters_.empty() && letters_.back() == -x)
            letters_.pop_back();
        else
            letters_.push_back(x);
    }
    return *this;
}

int Word::exponent_sum(int g) const
{
    int s = 0;
    for (int x : letters_) {
        if (x == g + 1)
            ++s;
        else if (x == -(g + 1))
            --s;
    }
    return s;
}

Word generator_word(int g, int power)
{
    std::vector<int> letters(static_cast<std::size_t>(std::abs(power)), power >= 0 ? g + 1 : -(g + 1));
    return Word(std::move(letters));
}

Word cyclically_reduce(const Word& w)
{
    const auto& l = w.letters();
    std::size_t b = 0, e = l.size();
    while (e - b >= 2 && l[b] == -l[e - 1]) {
        ++b;
        --e;
    }
    return Word(std::vector<int>(l.begin() + static_cast<std::ptrdiff_t>(b),
                                 l.begin() + static_cast<std::ptrdiff_t>(e)));
}

void GroupPresentation::validate() const
{
    if (generator_count < 0)
        throw GroupError(GroupErrc::BadPresentation, "negative generator count");
    auto check = [&](const Word& w, const char* what) {
        for (int x : w.letters())
            if (std::abs(x) > generator_count)
                throw GroupError(GroupErrc::BadPresentation,
                                 std::string(what) + " uses generator " + std::to_string(std::abs(x))
                                     + " of " + std::to_string(generator_count));
    };
    for (const Word& r : relators)
        check(r, "relator");
    if (meridian)
        check(*meridian, "meridian");
    if (longitude)
        check(*longitude, "longitude");
}

std::string AbelianGroup::to_string() const
{
    std::string out;
    for (int i = 0; i < rank; ++i)
        out += out.empty() ? "Z" : " + Z";
    for (const BigInt& d : torsion) {
        if (!out.empty())
            out += " + ";
        out += "Z/" + d.str();
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

Word parse_word(std::string_view text, int generator_count)
{
    std::vector<int> letters;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '1')
            continue;
        if (ch >= 'a' && ch <= 'z')
            letters.push_back(ch - 'a' + 1);
        else if (ch >= 'A' && ch <= 'Z')
            letters.push_back(-(ch - 'A' + 1));
        else
            throw GroupError(GroupErrc::BadPresentation, std::string("bad letter '") + ch + "' in word");
        if (std::abs(letters.back()) > generator_count)
            throw GroupError(GroupErrc::BadPresentation,
                             std::string("letter '") + ch + "' exceeds " + std::to_string(generator_count)
                                 + " generators");
    }
    return Word(std::move(letters));
}

std::string format_word(const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (int x : w.letters()) {
        if (std::abs(x) > 26)
            throw GroupError(GroupErrc::BadPresentation, "text format supports at most 26 generators");
        out.push_back(x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1));
    }
    return out;
}

GroupPresentation parse_presentation(std::string_view text)
{
    GroupPresentation p;
    bool have_gens = false;
    std::vector<std::string> pending;  // (key:value) items after gens
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find(';', start);
        if (stop == std::string_view::npos)
            stop = text.size();
        const std::string item = trim(text.substr(start, stop - start));
        start = stop + 1;
        if (item.empty())
            continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw GroupError(GroupErrc::BadPresentation, "expected 'key: value', got '" + item + "'");
        const std::string key = trim(std::string_view(item).substr(0, colon));
        const std::string value = trim(std::string_view(item).substr(colon + 1));
        if (key == "gens") {
            if (have_gens)
                throw GroupError(GroupErrc::BadPresentation, "duplicate 'gens'");
            try {
                std::size_t used = 0;
                p.generator_count = std::stoi(value, &used);
                if (used != value.size() || p.generator_count < 0)
                    throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw GroupError(GroupErrc::BadPresentation, "bad generator count '" + value + "'");
            }
            if (p.generator_count > 26)
                throw GroupError(GroupErrc::BadPresentation, "text format supports at most 26 generators");
            have_gens = true;
        } else if (key == "rel" || key == "meridian" || key == "longitude") {
            pending.push_back(item);
        } else {
            throw GroupError(GroupErrc::BadPresentation, "unknown key '" + key + "'");
        }
    }
    if (!have_gens)
        throw GroupError(GroupErrc::BadPresentation, "missing 'gens: n'");
    for (const std::string& item : pending) {
        const auto colon = item.find(':');
        const std::string key = trim(std::string_view(item).substr(0, colon));
        Word w = parse_word(std::string_view(item).substr(colon + 1), p.generator_count);
        if (key == "rel")
            p.relators.push_back(std::move(w));
        else if (key == "meridian")
            p.meridian = std::move(w);
        else
            p.longitude = std::move(w);
    }
    return p;
}

std::string format_presentation(const GroupPresentation& p)
{
    std::ostringstream os;
    os << "gens: " << p.generator_count;
    for (const Word& r : p.relators)
        os << "; rel: " << format_word(r);
    if (p.meridian)
        os << "; meridian: " << format_word(*p.meridian);
    if (p.longitude)
        os << "; longitude: " << format_word(*p.longitude);
    return os.str();
}

GroupPresentation wirtinger(const KnotDiagram& d)
{
    GroupPresentation p;
    if (d.crossing_count() == 0) {
        p.generator_count = 1;
        p.meridian = generator_word(0);
        p.longitude = Word{};
        return p;
    }
    const int n = static_cast<int>(d.arcs().size());
    const int m = static_cast<int>(d.passage_count());
    p.generator_count = n;

    for (std::size_t ci = 0; ci < d.crossing_count(); ++ci) {
        const Crossing& c = d.crossings()[ci];
        const int u = c.under_position();
        const int out_arc = d.arc_at(u);
        const int in_arc = (out_arc + n - 1) % n;
        const Word xo = generator_word(d.arc_at(c.over_position()), c.sign);
        // x_out = xo^-1 x_in xo
        Word rel = xo.inverse() * generator_word(in_arc) * xo * generator_word(out_arc, -1);
        p.relators.push_back(cyclically_reduce(rel));
    }
    p.relators.pop_back();

    Word lon;
    const int start = d.arcs()[0].start;
    for (int k = 1; k <= m; ++k) {
        const int pos = (start + k) % m;
        if (d.is_over(pos))
            continue;
        const Crossing& c = d.crossings()[d.traversal()[pos]];
        lon *= generator_word(d.arc_at(c.over_position()), c.sign);
    }
    lon *= generator_word(0, -writhe(d));
    p.meridian = generator_word(0);
    p.longitude = std::move(lon);
    return p;
}

GroupPresentation zero_surgery_group(const GroupPresentation& p)
{
    if (!p.longitude)
        throw GroupError(GroupErrc::MissingLongitude, "presentation has no longitude");
    GroupPresentation q = p;
    if (!p.longitude->empty())
        q.relators.push_back(cyclically_reduce(*p.longitude));
    return q;
}

IntMatrix relator_matrix(const GroupPresentation& p)
{
    IntMatrix m(p.relators.size(), std::vector<BigInt>(static_cast<std::size_t>(p.generator_count)));
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int x : p.relators[i].letters())
            m[i][static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    return m;
}

AbelianGroup abelianization(const GroupPresentation& p)
{
    return abelian_invariants(relator_matrix(p), p.generator_count);
}

}  // namespace zsurg
