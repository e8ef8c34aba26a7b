#pragma once

#include <string>
#include <vector>

#include "zsurg/bigint.hpp"
#include "zsurg/laurent.hpp"

namespace testdata {

std::string data_path(const std::string& file);       // bundled data/
std::string test_data_path(const std::string& file);  // tests/data/

/// One row of the KnotInfo extract.
struct ReferenceKnot {
    std::string name;
    std::string dt;
    std::vector<int> braid;
    std::vector<zsurg::BigInt> alexander;  // lowest power first, value 1 at t = 1
    int signature = 0;
    zsurg::BigInt determinant;
    int arf = 0;
};

std::vector<ReferenceKnot> load_reference();
const ReferenceKnot& reference(const std::vector<ReferenceKnot>& all, const std::string& name);

/// "1-3*t+t^2" -> {1, -3, 1}
std::vector<zsurg::BigInt> parse_polynomial(const std::string& text);

/// Coefficients of a Laurent polynomial, lowest first, with the overall
/// sign chosen so that the value at t = 1 is positive.
std::vector<zsurg::BigInt> coefficient_list(const zsurg::LaurentPolynomial& p);

std::string read_file(const std::string& path);

}  // namespace testdata
