#pragma once

#include "blockspec/numeric.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace blockspec {

/// Minimal table writer: '.' decimal separator, '\n' line endings, UTF-8,
/// no quoting (cells never contain the delimiter).
class TableWriter {
public:
    TableWriter(std::ostream& out, bool tsv = false) : out_(out), sep_(tsv ? '\t' : ',') {}

    void row(const std::vector<std::string>& cells);

private:
    std::ostream& out_;
    char sep_;
};

}  // namespace blockspec
