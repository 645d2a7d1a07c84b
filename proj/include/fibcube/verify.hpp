#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibcube/hypergraph.hpp"

namespace fibcube {

/// All simple hypergraphs on exactly m labeled vertices (every antichain of
/// the >= 2-element subsets of [m], including the edgeless one), deterministic
/// order. Counts grow Dedekind-fast; m <= 5 is the supported range (CapError
/// beyond).
std::vector<Hypergraph> enumerate_simple_hypergraphs(std::size_t m);

struct VerifyConfig {
    std::uint64_t seed = 1;
    std::size_t exhaustive_n = 4;  // sweep every simple hypergraph on <= this many vertices
    std::size_t samples = 100;     // seeded random instances
    std::size_t max_n = 7;         // vertex bound for random instances
    bool self_test = false;        // inject one corrupted isomorphism; must be detected
};

/// Streamable sweep report: JSON-lines, one instance per line, first line the
/// config header, last line the summary. Byte-identical for identical config.
struct VerifyResult {
    std::vector<std::string> report_lines;
    std::size_t instances = 0;
    std::size_t failures = 0;
    bool all_ok = false;
    int exit_code = 0;  // 0 pass, 1 property violation (or injected mutant)
};

/// on_line, when given, receives each report line as it is produced, so long
/// sweeps stream and partial runs stay inspectable.
VerifyResult run_verify(const VerifyConfig& config,
                        const std::function<void(const std::string&)>& on_line = {});

}  // namespace fibcube
