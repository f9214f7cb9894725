#include "wordbench/tables.hpp"

#include <sstream>

#include "wordbench/embedded_data.hpp"

namespace wb {

std::vector<TableRow> parse_tables(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos)
            fail("BadTableData", "line " + std::to_string(lineno) + ": expected 3 fields");
        std::string kind = line.substr(0, t1);
        if (kind != "g" && kind != "h")
            fail("BadTableData", "line " + std::to_string(lineno) + ": table must be g or h");
        TableRow row;
        row.table = kind == "g" ? 1 : 2;
        try {
            row.row = std::stoi(line.substr(t1 + 1, t2 - t1 - 1));
        } catch (const std::logic_error&) {
            fail("BadTableData", "line " + std::to_string(lineno) + ": bad row index");
        }
        row.morphism = parse_morphism(line.substr(t2 + 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<TableRow>& morphism_tables() {
    static const std::vector<TableRow> rows = parse_tables(data::tables_tsv());
    return rows;
}

const TableRow& table_row(int table, int row) {
    for (const TableRow& r : morphism_tables())
        if (r.table == table && r.row == row) return r;
    fail("UnknownTableRow", "no row " + std::to_string(row) + " in table " + std::to_string(table));
}

TableVerification verify_tables(size_t closure_iterations) {
    TableVerification v;
    for (const TableRow& row : morphism_tables()) {
        TableVerification::Entry e;
        e.id = row.id();
        try {
            std::vector<Word> images(row.morphism.img.begin(), row.morphism.img.end());
            RoleTriple rt = assign_roles(images, row.orientation());
            e.roles_ok = true;
            RoleCheck chk = row.table == 1 ? check_forward(rt) : check_reverse(rt);
            e.check_ok = chk.ok();
            e.detail = chk.describe();
            if (row.table == 1 && e.check_ok) {
                e.closure_ok = true;
                RoleTriple cur = rt;
                for (size_t k = 0; k < closure_iterations && e.closure_ok; ++k) {
                    std::string note;
                    if (!closure_under_derivation(cur, &note)) {
                        e.closure_ok = false;
                        e.detail += "; closure step " + std::to_string(k + 1) + ": " + note;
                        break;
                    }
                    Morphism next = derive_next(Morphism{{cur.a, cur.b, cur.c}});
                    cur = RoleTriple{next(0), next(1), next(2), Orientation::Forward};
                }
            } else {
                e.closure_ok = row.table == 2; // closure only applies to forward rows
            }
        } catch (const Error& err) {
            e.detail = err.what();
        }
        if (!(e.roles_ok && e.check_ok && e.closure_ok)) ++v.failures;
        v.entries.push_back(std::move(e));
    }
    return v;
}

} // namespace wb
