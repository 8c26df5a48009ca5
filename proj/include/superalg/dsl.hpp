#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superalg/algebra.hpp"

namespace salg {

// Parse failure with a 1-based position in the input text.
class DslError : public Error {
public:
    DslError(const std::string& msg, size_t line, size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg), line(line),
          column(column)
    {
    }
    size_t line, column;
};

// One `mul` line before scalar parsing.
struct MulLine {
    std::string left, right, rhs;
    size_t line = 0, rhs_column = 1;
};

struct AlgebraDocument {
    std::string name = "algebra";
    uint32_t characteristic = 0;
    std::vector<std::string> params;
    std::vector<std::string> basis;
    std::vector<std::string> odd;
    std::optional<std::string> unit;
    size_t unit_line = 0, unit_column = 1;
    std::vector<MulLine> mul;
};

// Grammar, one statement per line, '#' comments:
//   algebra NAME | char INT | params NAME* | basis NAME+ | odd NAME*
//   unit LINCOMB | mul NAME NAME = LINCOMB
// LINCOMB is TERM (+ TERM)* with TERM = [SCALAR*]NAME. `unit B` for a single
// basis element B fills in the products with B that are not written out.
AlgebraDocument parse_document(const std::string& text);
AlgebraPtr build_algebra(const AlgebraDocument& doc);
AlgebraPtr parse_algebra(const std::string& text);

// Canonical text: basis in index order, mul lines sorted by (left, right).
std::string serialize_algebra(const SuperAlgebra& A);

// Same structure constants, names, parities and unit.
bool same_structure(const SuperAlgebra& A, const SuperAlgebra& B);

} // namespace salg
