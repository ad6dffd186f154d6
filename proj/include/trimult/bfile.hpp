#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trimult/integer.hpp"

namespace trimult {

/// OEIS bulk-term format: lines of "n a(n)", '#' comments and blank lines
/// ignored, indices strictly increasing.
struct BFileEntry {
    long long n;
    BigInt value;
};

struct BFile {
    std::string id;
    std::vector<BFileEntry> entries;
};

struct BFileParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BFile parse_bfile(std::istream& in, std::string id = "");
BFile load_bfile(const std::string& path);

struct OeisMismatch {
    long long file_n;
    BigInt file_value;
    BigInt engine_value;
};

struct OeisCheckReport {
    bool matched = false;
    int shift = 0;          // engine index i corresponds to file index i + shift
    std::size_t overlap = 0;
    std::optional<OeisMismatch> first_mismatch;  // best alignment's first clash
};

/// Compare engine terms (indexed from 0) against a b-file, trying index
/// shifts in -2..2 to absorb differing offset conventions. The first shift
/// whose full overlap matches wins; otherwise the report carries the most
/// promising alignment's first mismatch.
OeisCheckReport check_bfile_against_terms(const BFile& bfile, const std::vector<BigInt>& terms);

}  // namespace trimult
