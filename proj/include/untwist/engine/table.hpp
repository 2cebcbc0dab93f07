#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "untwist/engine/engine.hpp"
#include "untwist/knot/knot_record.hpp"

namespace untwist {

struct TableRow {
    std::string knot;
    TwistSet known;
    TwistSet unknown;
};

// Lines "knot | known | unknown"; '#' starts a comment. Throws std::invalid_argument with the line number.
std::vector<TableRow> parse_expected_table(std::istream& in);
std::vector<TableRow> load_expected_table(const std::string& path);

struct TableComparison {
    std::string knot;
    bool present = true;  // found in the dataset
    TableRow expected;
    TableRow actual;
    bool match() const { return present && expected.known == actual.known && expected.unknown == actual.unknown; }
};

struct TableDiff {
    std::vector<TableComparison> rows;
    bool match() const;
    std::size_t mismatches() const;
};

TableDiff reproduce_table(const std::vector<KnotRecord>& dataset, const std::vector<TableRow>& expected,
                          const Config& config = {});

std::string format_table_diff(const TableDiff& d);

}  // namespace untwist
