#pragma once

#include <string>
#include <vector>

namespace domlab {

/// Sorted set of integers in which no two members differ by one.
class ExactSet {
public:
    /// Throws InvalidArgument (empty, duplicate, or a member below
    /// `min_value`) or ContiguousSet.
    static ExactSet make(std::vector<int> values, int min_value = 1);
    /// Parses "5" or "9,11". Throws ParseError on malformed text.
    static ExactSet parse(const std::string& text, int min_value = 1);

    [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
    [[nodiscard]] bool contains(int v) const;
    [[nodiscard]] std::string to_string() const;

    bool operator==(const ExactSet&) const = default;

private:
    explicit ExactSet(std::vector<int> v) : values_(std::move(v)) {}
    std::vector<int> values_;
};

}  // namespace domlab
