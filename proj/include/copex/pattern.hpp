#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "copex/family.hpp"
#include "copex/rgraph.hpp"

namespace copex {

// A labeled template: an injective image of the m pattern vertices must make
// every required tuple an edge of the host and every forbidden tuple a
// non-edge. Vertex roles are fixed (not up to isomorphism), matching the
// case analyses this reproduces.
struct Pattern {
    int m = 0;
    int r = 3;
    std::vector<Edge> required;
    std::vector<Edge> forbidden;

    Pattern() = default;
    Pattern(int m, int r, std::vector<Edge> required, std::vector<Edge> forbidden);
};

Pattern pattern_from_json(const nlohmann::json& j);
nlohmann::json pattern_to_json(const Pattern& p);

// All injective maps (pattern vertex -> host vertex) satisfying the
// template, in lexicographic order of the map vector.
std::vector<std::vector<int>> find_pattern_embeddings(const RGraph& h, const Pattern& p);

struct ExclusionVerdict {
    bool excluded;
    int witness_member = -1;          // first member admitting an embedding
    std::vector<int> witness_map;     // its first embedding
};

ExclusionVerdict family_excludes_pattern(const Family& fam, const Pattern& p);

// One entry of a case suite. Two kinds:
//  - exclusion: the referenced family must (or must not) exclude the pattern;
//  - structure: the "located" edges (a subset of the pattern's required
//    edges) must span a graph isomorphic to a named construction.
struct SuiteEntry {
    std::string name;
    std::string kind;  // "exclusion" | "structure"
    Pattern pattern;
    // exclusion
    std::string family_ref;
    bool expect_excluded = true;
    // structure
    std::vector<Edge> located;
    std::string isomorphic_to;
};

struct SuiteResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteReport {
    std::vector<SuiteResult> results;
    int failures = 0;
};

// Loads a suite JSON file; family references are resolved against the suite
// file's directory, then against the COPEX_FIXTURES environment variable.
struct Suite {
    std::string name;
    std::vector<SuiteEntry> entries;
    std::vector<std::pair<std::string, Family>> families;

    const Family& family(const std::string& ref) const;
};

Suite load_suite_file(const std::string& path);

SuiteReport check_case_suite(const Suite& suite);

}  // namespace copex
