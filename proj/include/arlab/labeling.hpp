#pragma once

#include <arlab/dss.hpp>

#include <algorithm>
#include <vector>

namespace arlab {

/// One positive label per edge, aligned to the graph's canonical edge order.
struct Labeling
{
    std::vector<Value> labels;

    auto size() const -> std::size_t { return labels.size(); }
    auto operator[](std::size_t e) const -> Value { return labels[e]; }
    auto max_label() const -> Value
    {
        return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    }

    friend auto operator==(const Labeling &, const Labeling &) -> bool = default;
};

} // namespace arlab
