#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fedecg/recording.hpp"

namespace fedecg {

/// One rejected record from load_dataset. kind is one of
/// "io error", "schema error", "label error".
struct RecordError {
    std::string id;
    std::string path;
    std::string kind;
    std::string message;
};

struct LoadResult {
    Dataset dataset;
    std::vector<RecordError> errors;
};

/// Manifest format: one `<id>,<relative-path>` per line. Record files carry a
/// header line `fs=<int>,age=<int|NA>,sex=<M|F|U>,label=<abbrev>` followed by
/// d lines of 12 comma-separated millivolt samples (leads I, II, III, aVR,
/// aVL, aVF, V1-V6). Invalid records are skipped and reported; a missing
/// manifest throws IoError.
LoadResult load_dataset(const std::filesystem::path& manifest_path);

/// Writes `manifest.csv` plus one record file per recording under
/// `dir/records/`. Sample values round-trip bit-exactly.
void write_dataset(const Dataset& ds, const std::filesystem::path& dir);

}  // namespace fedecg
