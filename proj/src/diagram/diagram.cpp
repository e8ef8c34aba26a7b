#include "zsurg/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace zsurg {

std::string_view to_string(DiagramErrc e)
{
    switch (e) {
    case DiagramErrc::BadToken: return "BadToken";
    case DiagramErrc::OddLabel: return "OddLabel";
    case DiagramErrc::DuplicateLabel: return "DuplicateLabel";
    case DiagramErrc::NonContiguousLabels: return "NonContiguousLabels";
    case DiagramErrc::NonRealizable: return "NonRealizable";
    case DiagramErrc::TooManyCrossings: return "TooManyCrossings";
    }
    return "Unknown";
}

namespace {

void validate(const DtCode& code)
{
    const std::size_t n = code.labels.size();
    std::vector<bool> seen(n + 1, false);
    for (int label : code.labels) {
        const int a = std::abs(label);
        if (a % 2 != 0)
            throw DiagramError(DiagramErrc::OddLabel, "DT label " + std::to_string(label) + " is odd");
        if (a == 0 || static_cast<std::size_t>(a / 2) > n)
            throw DiagramError(DiagramErrc::NonContiguousLabels,
                               "DT label " + std::to_string(label) + " outside 2.." + std::to_string(2 * n));
        if (seen[a / 2])
            throw DiagramError(DiagramErrc::DuplicateLabel, "DT label " + std::to_string(a) + " repeated");
        seen[a / 2] = true;
    }
}

}  // namespace

DtCode parse_dt(std::string_view text)
{
    DtCode code;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        char* end = nullptr;
        const long v = std::strtol(token.c_str(), &end, 10);
        if (end == token.c_str() || *end != '\0' || token == "-" || token == "+")
            throw DiagramError(DiagramErrc::BadToken, "not an integer: '" + token + "'");
        code.labels.push_back(static_cast<int>(v));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n' || ch == '\r' || ch == '[' || ch == ']'
            || ch == '(' || ch == ')')
            flush();
        else
            token.push_back(ch);
    }
    flush();
    validate(code);
    return code;
}

std::string serialize(const DtCode& code)
{
    std::string out;
    for (std::size_t i = 0; i < code.labels.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += std::to_string(code.labels[i]);
    }
    return out;
}

std::array<EdgeEnd, 4> crossing_rotation(int a, int b, bool flipped)
{
    const EdgeEnd a_in{a, true}, a_out{a, false}, b_in{b, true}, b_out{b, false};
    if (!flipped)
        return {a_out, b_out, a_in, b_in};
    return {a_out, b_in, a_in, b_out};
}

namespace {

// Half-edge id: 2*position + (outgoing ? 1 : 0).
int half_edge(const EdgeEnd& e) { return 2 * e.position + (e.incoming ? 0 : 1); }

struct Rotation {
    std::vector<int> crossing_of;  // per half-edge
    std::vector<int> slot_of;      // per half-edge
    std::vector<std::array<EdgeEnd, 4>> ends;
};

Rotation build_rotation(const DtCode& code, const std::vector<bool>& flips)
{
    const int n = static_cast<int>(code.labels.size());
    Rotation r;
    r.crossing_of.assign(4 * n, -1);
    r.slot_of.assign(4 * n, -1);
    r.ends.resize(n);
    for (int i = 0; i < n; ++i) {
        r.ends[i] = crossing_rotation(2 * i, std::abs(code.labels[i]) - 1, flips[i]);
        for (int s = 0; s < 4; ++s) {
            const int h = half_edge(r.ends[i][s]);
            r.crossing_of[h] = i;
            r.slot_of[h] = s;
        }
    }
    return r;
}

int twin(int h, int passages)
{
    const int pos = h / 2;
    if (h % 2 == 1)  // outgoing at pos arrives at pos+1
        return 2 * ((pos + 1) % passages);
    return 2 * ((pos + passages - 1) % passages) + 1;
}

// Face orbits of next(twin(h)); returns the orbit id per half-edge.
std::vector<int> trace_faces(const Rotation& r, int& face_count)
{
    const int m = static_cast<int>(r.crossing_of.size());
    const int passages = m / 2;
    std::vector<int> face(m, -1);
    face_count = 0;
    for (int start = 0; start < m; ++start) {
        if (face[start] >= 0)
            continue;
        int h = start;
        while (face[h] < 0) {
            face[h] = face_count;
            const int t = twin(h, passages);
            const int c = r.crossing_of[t];
            h = half_edge(r.ends[c][(r.slot_of[t] + 1) % 4]);
        }
        ++face_count;
    }
    return face;
}

}  // namespace

std::size_t count_faces(const DtCode& code, const std::vector<bool>& flips)
{
    if (code.labels.empty())
        return 2;
    int faces = 0;
    trace_faces(build_rotation(code, flips), faces);
    return static_cast<std::size_t>(faces);
}

KnotDiagram realize(const DtCode& code)
{
    validate(code);
    const std::size_t n = code.labels.size();
    if (n == 0)
        return KnotDiagram{};
    if (n > kMaxRealizeCrossings)
        throw DiagramError(DiagramErrc::TooManyCrossings,
                           std::to_string(n) + " crossings exceeds the embedding search limit");

    // Reflecting the plane toggles every flip, so crossing 0 is pinned and the
    // remaining 2^(n-1) rotation systems are searched for a genus-0 one.
    std::vector<bool> flips(n, false);
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 1; i < n; ++i)
            flips[i] = (mask >> (i - 1)) & 1U;
        if (count_faces(code, flips) != n + 2)
            continue;

        std::vector<Crossing> crossings(n);
        std::vector<int> traversal(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            Crossing& c = crossings[i];
            c.first = static_cast<int>(2 * i);
            c.second = std::abs(code.labels[i]) - 1;
            c.first_over = code.labels[i] > 0;
            c.ends = crossing_rotation(c.first, c.second, flips[i]);
            const int cross = flips[i] ? -1 : 1;  // sign of d_first x d_second
            c.sign = c.first_over ? cross : -cross;
            traversal[c.first] = static_cast<int>(i);
            traversal[c.second] = static_cast<int>(i);
        }
        return KnotDiagram(std::move(crossings), std::move(traversal));
    }
    throw DiagramError(DiagramErrc::NonRealizable, "DT code '" + serialize(code) + "' has no planar embedding");
}

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings, std::vector<int> traversal)
    : crossings_(std::move(crossings)), traversal_(std::move(traversal))
{
    const int m = static_cast<int>(traversal_.size());
    std::vector<int> unders;
    for (int p = 0; p < m; ++p)
        if (!is_over(p))
            unders.push_back(p);
    const int n = static_cast<int>(unders.size());
    arc_of_position_.assign(m, -1);
    for (int j = 0; j < n; ++j) {
        const Arc a{unders[j], unders[(j + 1) % n]};
        arcs_.push_back(a);
        arc_of_position_[a.start] = j;
        for (int p = (a.start + 1) % m; p != a.end; p = (p + 1) % m)
            arc_of_position_[p] = j;
    }
}

bool KnotDiagram::is_over(int position) const
{
    const Crossing& c = crossings_.at(traversal_.at(position));
    return (c.first == position) == c.first_over;
}

int KnotDiagram::arc_at(int position) const { return arc_of_position_.at(position); }

std::vector<std::vector<Corner>> KnotDiagram::faces() const
{
    std::vector<std::vector<Corner>> out;
    const int n = static_cast<int>(crossings_.size());
    if (n == 0)
        return out;
    Rotation r;
    r.crossing_of.assign(4 * n, -1);
    r.slot_of.assign(4 * n, -1);
    r.ends.resize(n);
    for (int i = 0; i < n; ++i) {
        r.ends[i] = crossings_[i].ends;
        for (int s = 0; s < 4; ++s) {
            const int h = half_edge(r.ends[i][s]);
            r.crossing_of[h] = i;
            r.slot_of[h] = s;
        }
    }
    int count = 0;
    const std::vector<int> face = trace_faces(r, count);
    out.resize(count);
    std::vector<bool> done(face.size(), false);
    const int passages = 2 * n;
    for (std::size_t start = 0; start < face.size(); ++start) {
        if (done[start])
            continue;
        int h = static_cast<int>(start);
        auto& corners = out[face[start]];
        while (!done[h]) {
            done[h] = true;
            const int t = twin(h, passages);
            corners.push_back({r.crossing_of[t], r.slot_of[t]});
            h = half_edge(r.ends[r.crossing_of[t]][(r.slot_of[t] + 1) % 4]);
        }
    }
    return out;
}

DtCode KnotDiagram::to_dt() const
{
    DtCode code;
    code.labels.resize(crossings_.size());
    for (const Crossing& c : crossings_)
        code.labels[c.first / 2] = (c.second + 1) * (c.first_over ? 1 : -1);
    return code;
}

KnotDiagram mirror(const KnotDiagram& d)
{
    std::vector<Crossing> crossings = d.crossings();
    for (Crossing& c : crossings) {
        c.first_over = !c.first_over;
        c.sign = -c.sign;
    }
    return KnotDiagram(std::move(crossings), d.traversal());
}

int writhe(const KnotDiagram& d)
{
    int w = 0;
    for (const Crossing& c : d.crossings())
        w += c.sign;
    return w;
}

namespace {

std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r\"");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\"");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"')
            quoted = !quoted;
        else if (ch == ',' && !quoted) {
            out.push_back(trim(cur));
            cur.clear();
        } else
            cur.push_back(ch);
    }
    out.push_back(trim(cur));
    return out;
}

}  // namespace

KnotTable read_knot_table(std::string_view csv_text)
{
    KnotTable table;
    std::istringstream in{std::string(csv_text)};
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        auto fields = split_csv(line);
        if (header.empty()) {
            header = fields;
            if (header.size() < 2 || header[0] != "name" || header[1] != "dt")
                throw std::invalid_argument("knot table header must start with 'name,dt'");
            continue;
        }
        fields.resize(std::max(fields.size(), header.size()));
        KnotRecord rec;
        rec.name = fields[0];
        if (rec.name.empty()) {
            table.errors.emplace_back("<line>", "empty knot name");
            continue;
        }
        try {
            rec.dt = parse_dt(fields[1]);
        } catch (const DiagramError& e) {
            table.errors.emplace_back(rec.name, std::string(to_string(e.code())) + ": " + e.what());
            continue;
        }
        for (std::size_t i = 2; i < header.size(); ++i) {
            if (fields[i].empty())
                continue;
            if (header[i] == "census_name")
                rec.census_name = fields[i];
            else if (header[i] == "tetrahedral_complexity")
                rec.tetrahedral_complexity = std::stoi(fields[i]);
            else
                rec.annotations.emplace_back(header[i], fields[i]);
        }
        table.records.push_back(std::move(rec));
    }
    return table;
}

KnotTable load_knot_table(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open knot table '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return read_knot_table(ss.str());
}

}  // namespace zsurg
