#include "untwist/engine/table.hpp"

#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "untwist/knot/dataset.hpp"

namespace untwist {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

TwistSet parse_set(const std::string& field) {
    TwistSet out;
    std::stringstream ss(field);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.insert(TwistIndex::parse(item));
    }
    return out;
}

}  // namespace

std::vector<TableRow> parse_expected_table(std::istream& in) {
    std::vector<TableRow> rows;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, '|')) cols.push_back(trim(col));
        if (line.back() == '|') cols.emplace_back();
        if (cols.size() != 3 || cols[0].empty())
            throw std::invalid_argument("expected table line " + std::to_string(lineno) + ": need 'knot | known | unknown'");
        try {
            rows.push_back({cols[0], parse_set(cols[1]), parse_set(cols[2])});
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("expected table line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

std::vector<TableRow> load_expected_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open expected table '" + path + "'");
    return parse_expected_table(in);
}

bool TableDiff::match() const { return mismatches() == 0; }

std::size_t TableDiff::mismatches() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.match() ? 0 : 1;
    return n;
}

TableDiff reproduce_table(const std::vector<KnotRecord>& dataset, const std::vector<TableRow>& expected,
                          const Config& config) {
    TableDiff d;
    std::vector<std::future<AnalysisReport>> jobs(expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const KnotRecord* k = nullptr;
        for (const auto& r : dataset)
            if (r.name == expected[i].knot) k = &r;
        if (!k) continue;
        auto policy = config.parallel ? std::launch::async : std::launch::deferred;
        jobs[i] = std::async(policy, [k, &config] { return analyze(*k, config); });
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        TableComparison c;
        c.knot = expected[i].knot;
        c.expected = expected[i];
        c.actual.knot = c.knot;
        if (!jobs[i].valid()) {
            c.present = false;
        } else {
            AnalysisReport rep = jobs[i].get();
            c.actual.known = rep.known;
            c.actual.unknown = rep.possible;
        }
        d.rows.push_back(std::move(c));
    }
    return d;
}

std::string format_table_diff(const TableDiff& d) {
    std::ostringstream os;
    for (const auto& r : d.rows) {
        if (!r.present) {
            os << r.knot << "  MISSING from dataset\n";
            continue;
        }
        os << r.knot << " | known " << to_string(r.actual.known) << " | unknown " << to_string(r.actual.unknown)
           << (r.match() ? "" : "  MISMATCH") << "\n";
        if (r.match()) continue;
        if (r.expected.known != r.actual.known) os << "    expected known   " << to_string(r.expected.known) << "\n";
        if (r.expected.unknown != r.actual.unknown)
            os << "    expected unknown " << to_string(r.expected.unknown) << "\n";
    }
    os << (d.match() ? "table matches" : std::to_string(d.mismatches()) + " row(s) differ") << " ("
       << d.rows.size() << " rows)\n";
    return os.str();
}

}  // namespace untwist
