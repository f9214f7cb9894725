#pragma once

#include <string>
#include <vector>

#include "wordbench/morphism.hpp"
#include "wordbench/roles.hpp"

namespace wb {

struct TableRow {
    int table = 1; // 1 = forward morphisms g_i, 2 = reverse morphisms h_i
    int row = 1;
    Morphism morphism;

    std::string id() const { return (table == 1 ? "g" : "h") + std::to_string(row); }
    Orientation orientation() const {
        return table == 1 ? Orientation::Forward : Orientation::Reverse;
    }
};

// The shipped table data (16 forward rows, 19 reverse rows).
const std::vector<TableRow>& morphism_tables();
const TableRow& table_row(int table, int row); // error UnknownTableRow

// Parses the tab-separated table format: "g TAB 1 TAB [w0,w1,w2]".
std::vector<TableRow> parse_tables(const std::string& text);

struct TableVerification {
    struct Entry {
        std::string id;
        bool roles_ok = false;
        bool check_ok = false;
        bool closure_ok = false; // forward rows only; derive_next iterated 3x
        std::string detail;
    };
    std::vector<Entry> entries;
    size_t failures = 0;
};

TableVerification verify_tables(size_t closure_iterations = 3);

} // namespace wb
