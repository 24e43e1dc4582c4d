#include "domlab/exact_set.hpp"

#include <algorithm>
#include <charconv>

#include "domlab/error.hpp"

namespace domlab {

ExactSet ExactSet::make(std::vector<int> values, int min_value) {
    if (values.empty()) throw Error(ErrorCode::InvalidArgument, "exact set must not be empty");
    std::sort(values.begin(), values.end());
    if (values.front() < min_value)
        throw Error(ErrorCode::InvalidArgument, "exact set member below " + std::to_string(min_value));
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] == values[i - 1]) throw Error(ErrorCode::InvalidArgument, "duplicate member " + std::to_string(values[i]));
        if (values[i] == values[i - 1] + 1)
            throw Error(ErrorCode::ContiguousSet,
                        std::to_string(values[i - 1]) + " and " + std::to_string(values[i]) + " are contiguous");
    }
    return ExactSet(std::move(values));
}

ExactSet ExactSet::parse(const std::string& text, int min_value) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        int v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) throw Error(ErrorCode::ParseError, "bad integer set '" + text + "'");
        values.push_back(v);
        pos = comma + 1;
    }
    return make(std::move(values), min_value);
}

bool ExactSet::contains(int v) const { return std::binary_search(values_.begin(), values_.end(), v); }

std::string ExactSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
    return out + "}";
}

}  // namespace domlab
