#include "trimult/bfile.hpp"

#include <fstream>
#include <sstream>

namespace trimult {

BFile parse_bfile(std::istream& in, std::string id) {
    BFile out;
    out.id = std::move(id);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        long long n;
        std::string value;
        if (!(ls >> n >> value))
            throw BFileParseError("b-file line " + std::to_string(lineno) + ": expected 'n value'");
        std::string tail;
        if (ls >> tail)
            throw BFileParseError("b-file line " + std::to_string(lineno) + ": trailing junk");
        BigInt v;
        try {
            v = parse_decimal(value);
        } catch (const std::invalid_argument&) {
            throw BFileParseError("b-file line " + std::to_string(lineno) + ": bad value '" +
                                  value + "'");
        }
        if (!out.entries.empty() && n <= out.entries.back().n)
            throw BFileParseError("b-file line " + std::to_string(lineno) +
                                  ": indices must increase");
        out.entries.push_back({n, std::move(v)});
    }
    if (out.entries.empty()) throw BFileParseError("b-file has no entries");
    return out;
}

BFile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BFileParseError("cannot open b-file: " + path);
    std::string id = path;
    if (auto slash = id.find_last_of('/'); slash != std::string::npos) id = id.substr(slash + 1);
    if (auto dot = id.find_last_of('.'); dot != std::string::npos) id = id.substr(0, dot);
    return parse_bfile(in, id);
}

OeisCheckReport check_bfile_against_terms(const BFile& bfile, const std::vector<BigInt>& terms) {
    OeisCheckReport best;
    std::size_t best_prefix = 0;
    for (int shift : {0, 1, -1, 2, -2}) {
        std::size_t overlap = 0, matched_prefix = 0;
        std::optional<OeisMismatch> mismatch;
        for (const BFileEntry& e : bfile.entries) {
            long long idx = e.n - shift;
            if (idx < 0 || idx >= static_cast<long long>(terms.size())) continue;
            ++overlap;
            const BigInt& engine = terms[static_cast<std::size_t>(idx)];
            if (engine == e.value) {
                if (!mismatch) ++matched_prefix;
            } else if (!mismatch) {
                mismatch = OeisMismatch{e.n, e.value, engine};
            }
        }
        if (overlap > 0 && !mismatch) {
            OeisCheckReport rep;
            rep.matched = true;
            rep.shift = shift;
            rep.overlap = overlap;
            return rep;
        }
        if (matched_prefix >= best_prefix) {
            best_prefix = matched_prefix;
            best.matched = false;
            best.shift = shift;
            best.overlap = overlap;
            best.first_mismatch = mismatch;
        }
    }
    return best;
}

}  // namespace trimult
