#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ooc/generator.hpp"
#include "ooc/setsearch.hpp"

namespace ooc {

// JSON records use the display convention: rows 1-based, columns 0-based.

// {"id":i,"n":..,"w":..,"dop":[..],"positions":[1-based..]}
nlohmann::ordered_json one_dim_record(int id, const OneDimCode& code);

// {"id":i,"L":..,"N":..,"w":..,"wpr":[[row,col],..],"dopr":[[row,gap],..],"lambda_a":..}
nlohmann::ordered_json catalog_record(int id, const Candidate& candidate);

// One record per line, ids 0..count-1 in order.
void write_catalog(std::ostream& out, std::span<const Candidate> candidates);

// {"params":{...},"bound":..,"sets":[{"ids":[..],"size":..,"lambda_a":..,"lambda_c":..},..],
//  "complete":bool}
nlohmann::ordered_json report_json(const SetSearchResult& result, const CompatibilityGraph& graph);

// Profile values in tau order.
nlohmann::ordered_json profile_json(const CorrelationProfile& profile);

// A code pool file: optional '#' comment lines, "L=4" / "N=5" dimension
// tokens, then one "wpr: ..." or "dopr: ..." line per code.
struct CodeFile {
    int rows = 0;
    int cols = 0;
    std::vector<MatrixCode> codes;
};

CodeFile parse_code_file(std::istream& in);

}  // namespace ooc
