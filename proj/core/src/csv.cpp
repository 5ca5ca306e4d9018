#include "blockspec/csv.hpp"

namespace blockspec {

void TableWriter::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << sep_;
        out_ << cells[i];
    }
    out_ << '\n';
}

}  // namespace blockspec
