#include "test_data.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace testdata {

std::string data_path(const std::string& file)
{
    return std::string(ZSURG_DATA_DIR) + "/" + file;
}

std::string test_data_path(const std::string& file)
{
    return std::string(ZSURG_TEST_DATA_DIR) + "/" + file;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<zsurg::BigInt> parse_polynomial(const std::string& text)
{
    static const std::regex term(R"(([+-]?)(\d*)\*?(t(\^(\d+))?)?)");
    std::vector<zsurg::BigInt> coeffs;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
        const std::smatch& m = *it;
        if (m.length(0) == 0)
            continue;
        zsurg::BigInt c = m[2].length() ? zsurg::BigInt(m[2].str()) : zsurg::BigInt(1);
        if (m[1] == "-")
            c = -c;
        const std::size_t power = !m[3].matched ? 0 : m[5].matched ? std::stoul(m[5].str()) : 1;
        if (coeffs.size() <= power)
            coeffs.resize(power + 1);
        coeffs[power] += c;
    }
    return coeffs;
}

std::vector<zsurg::BigInt> coefficient_list(const zsurg::LaurentPolynomial& p)
{
    std::vector<zsurg::BigInt> out = p.coefficients();
    if (p.at_one() < 0)
        for (auto& c : out)
            c = -c;
    return out;
}

std::vector<ReferenceKnot> load_reference()
{
    std::istringstream in(read_file(test_data_path("knotinfo_reference.csv")));
    std::string line;
    std::getline(in, line);
    std::vector<ReferenceKnot> out;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');)
            f.push_back(cell);
        if (f.size() != 7)
            throw std::runtime_error("bad reference row: " + line);
        ReferenceKnot k;
        k.name = f[0];
        k.dt = f[1];
        std::istringstream bs(f[2]);
        for (int x; bs >> x;)
            k.braid.push_back(x);
        k.alexander = parse_polynomial(f[3]);
        zsurg::BigInt at_one = 0;
        for (const auto& c : k.alexander)
            at_one += c;
        if (at_one < 0)
            for (auto& c : k.alexander)
                c = -c;
        k.signature = std::stoi(f[4]);
        k.determinant = zsurg::BigInt(f[5]);
        k.arf = std::stoi(f[6]);
        out.push_back(std::move(k));
    }
    return out;
}

const ReferenceKnot& reference(const std::vector<ReferenceKnot>& all, const std::string& name)
{
    for (const auto& k : all)
        if (k.name == name)
            return k;
    throw std::runtime_error("no reference row for " + name);
}

}  // namespace testdata
