#pragma once

#include "picard.hpp"
#include "repring.hpp"

namespace modrep {

struct GoldenCellDiff {
    std::string key;
    std::string printed;
    std::string computed;
    bool documented_erratum = false;
    std::string note;
};

struct GoldenDiff {
    std::string fixture;
    std::string convention;  // which pair-swap assignment matched
    i64 cells = 0;
    i64 matched = 0;
    i64 errata = 0;
    std::vector<GoldenCellDiff> mismatches;  // includes documented errata
    bool pass = false;                       // all cells matched or documented
};

struct GoldenOptions {
    std::string fixture_dir;
    i64 N = 40;
};

// regenerate every reference table and series and diff cell by cell
std::vector<GoldenDiff> reproduce_appendices(const GoldenOptions& opt);

// multiset cell syntax: "V1+2*V6+V8'"
std::map<std::string, i64> parse_cell(const std::string& s);
std::string cell_string(const std::map<std::string, i64>& cell);

// polynomial syntax "1+t^7+2*t^11", denominator "(1-t^4)(1-t^2)^2"
std::vector<i64> parse_poly(const std::string& s);
std::vector<i64> parse_factored_poly(const std::string& s);

} // namespace modrep
