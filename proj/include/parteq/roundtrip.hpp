#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "parteq/bijections.hpp"
#include "parteq/enumerate.hpp"
#include "parteq/statistics.hpp"

namespace parteq {

struct RoundtripFailure {
    std::string input;
    std::string stage; // forward, codomain, statistics, inverse, injectivity,
                       // cardinality, codomain-roundtrip
    std::string detail;
};

struct CellCounts {
    long domain = 0;
    long codomain = 0;
};

struct RoundtripReport {
    Bijection bijection = Bijection::f1;
    int n_max = 0;
    long checked = 0;          // domain objects pushed through the map
    long codomain_checked = 0; // codomain objects pushed back through the inverse
    std::map<Cell, CellCounts> cells;
    std::vector<RoundtripFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
    /// {bijection, n_max, checked, codomain_checked, failures:[{input, stage, detail}]}
    nlohmann::json to_json() const;
};

/// Exhaustive check over every domain element of weight <= n_max: the
/// image is in the codomain and in the matching cell, the inverse
/// recovers the input, images are distinct, and every cell of the codomain
/// has the same size as the matching domain cell. Every codomain element is
/// also pushed back and forth. Failures are collected, never thrown.
RoundtripReport roundtrip_report(Bijection b, int n_max, const Limits& limits = {});

} // namespace parteq
