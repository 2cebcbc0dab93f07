#include "untwist/floer/vsequence.hpp"

#include <sstream>
#include <stdexcept>

namespace untwist {

std::string vsequence_violation(const std::vector<std::int64_t>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < 0) return "V_" + std::to_string(k) + " is negative";
        std::int64_t next = k + 1 < values.size() ? values[k + 1] : 0;
        if (next > values[k] || next < values[k] - 1)
            return "step V_" + std::to_string(k) + " -> V_" + std::to_string(k + 1) + " is " +
                   std::to_string(values[k]) + " -> " + std::to_string(next);
    }
    return {};
}

VSequence::VSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (auto why = vsequence_violation(values_); !why.empty())
        throw std::invalid_argument("invalid V-sequence: " + why);
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

std::int64_t VSequence::operator[](std::int64_t k) const {
    if (k < 0) throw std::out_of_range("negative V-sequence index");
    return k < nu_plus() ? values_[static_cast<std::size_t>(k)] : 0;
}

std::string VSequence::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values_.size(); ++i) os << values_[i] << ",";
    os << "0)";
    return os.str();
}

}  // namespace untwist
