#include "ooc/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ooc {

using nlohmann::ordered_json;

ordered_json one_dim_record(int id, const OneDimCode& code) {
    ordered_json rec;
    rec["id"] = id;
    rec["n"] = code.length();
    rec["w"] = code.weight();
    rec["dop"] = code.gaps();
    ordered_json positions = ordered_json::array();
    for (int p : code.positions()) positions.push_back(p + 1);
    rec["positions"] = std::move(positions);
    return rec;
}

ordered_json catalog_record(int id, const Candidate& candidate) {
    const MatrixCode& code = candidate.code;
    ordered_json rec;
    rec["id"] = id;
    rec["L"] = code.rows();
    rec["N"] = code.cols();
    rec["w"] = code.weight();
    ordered_json wpr = ordered_json::array();
    for (const Cell& cell : code.cells()) wpr.push_back({cell.row + 1, cell.col});
    rec["wpr"] = std::move(wpr);
    ordered_json dopr = ordered_json::array();
    for (const RowGap& rg : code.dopr()) dopr.push_back({rg.row + 1, rg.gap});
    rec["dopr"] = std::move(dopr);
    rec["lambda_a"] = candidate.lambda_a;
    return rec;
}

void write_catalog(std::ostream& out, std::span<const Candidate> candidates) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
        out << catalog_record(static_cast<int>(i), candidates[i]).dump() << '\n';
}

ordered_json report_json(const SetSearchResult& result, const CompatibilityGraph& graph) {
    ordered_json report;
    ordered_json params;
    params["L"] = graph.params().rows;
    params["N"] = graph.params().cols;
    params["w"] = graph.params().weight;
    params["lambda_a_max"] = graph.lambda_a_max();
    params["lambda_c_max"] = graph.lambda_c_max();
    report["params"] = std::move(params);
    report["bound"] = result.bound;
    ordered_json sets = ordered_json::array();
    for (const CodeSet& set : result.sets) {
        ordered_json entry;
        entry["ids"] = set.ids;
        entry["size"] = set.size();
        entry["lambda_a"] = set.lambda_a;
        entry["lambda_c"] = set.lambda_c;
        sets.push_back(std::move(entry));
    }
    report["sets"] = std::move(sets);
    report["complete"] = result.complete;
    return report;
}

ordered_json profile_json(const CorrelationProfile& profile) {
    ordered_json rec;
    rec["kind"] = profile.kind == ProfileKind::Auto ? "auto" : "cross";
    rec["values"] = profile.values;
    rec["constraint"] = profile.constraint;
    return rec;
}

namespace {

std::string strip(std::string line) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

}  // namespace

CodeFile parse_code_file(std::istream& in) {
    CodeFile file;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        if (line.starts_with("wpr:") || line.starts_with("dopr:")) {
            if (file.rows <= 0 || file.cols <= 0)
                throw malformed_code_error("line " + std::to_string(lineno) +
                                           ": code listed before L= and N=");
            file.codes.push_back(parse_code(line, file.rows, file.cols));
            continue;
        }
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw malformed_code_error("line " + std::to_string(lineno) +
                                           ": unrecognized token '" + token + "'");
            const std::string key = token.substr(0, eq);
            int value = 0;
            try {
                value = std::stoi(token.substr(eq + 1));
            } catch (const std::exception&) {
                throw malformed_code_error("line " + std::to_string(lineno) +
                                           ": bad value in '" + token + "'");
            }
            if (key == "L")
                file.rows = value;
            else if (key == "N")
                file.cols = value;
            else
                throw malformed_code_error("line " + std::to_string(lineno) +
                                           ": unknown key '" + key + "'");
        }
    }
    if (file.rows <= 0 || file.cols <= 0)
        throw malformed_code_error("code file missing L= and N= dimensions");
    return file;
}

}  // namespace ooc
