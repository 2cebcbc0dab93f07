#pragma once

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "untwist/knot/knot_record.hpp"

namespace untwist {

class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using KnotLookup = std::function<const KnotRecord*(std::string_view)>;

// Builds a record from an expression such as "T(3,4)", "3*T(2,3)", "T(2,25) # -T(3,8)" or "-7_7".
// Bare names are resolved through `lookup`.
KnotRecord build_construction(std::string_view expr, const KnotLookup& lookup);

// Parses a JSON array of knot objects; throws DatasetError with position or field diagnostics.
std::vector<KnotRecord> load_dataset(std::istream& in);
std::vector<KnotRecord> load_dataset_file(const std::string& path);
KnotRecord record_from_json(const nlohmann::json& j, const KnotLookup& lookup);

nlohmann::json record_to_json(const KnotRecord& k);

// Throws std::out_of_range if absent.
const KnotRecord& find_knot(const std::vector<KnotRecord>& dataset, std::string_view name);

}  // namespace untwist
