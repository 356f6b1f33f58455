#include "fedecg/dataset_io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "fedecg/errors.hpp"

namespace fedecg {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

// Header: fs=<int>,age=<int|NA>,sex=<M|F|U>,label=<abbrev>
bool parse_header(const std::string& line, EcgRecording& rec, std::string& label_token,
                  std::string& err) {
    for (const std::string& field : split(strip(line), ',')) {
        const auto kv = split(field, '=');
        if (kv.size() != 2) {
            err = "malformed header field '" + field + "'";
            return false;
        }
        const std::string key = strip(kv[0]);
        const std::string val = strip(kv[1]);
        if (key == "fs") {
            double fs = 0;
            if (!parse_double(val, fs) || !(fs > 0)) {
                err = "bad fs '" + val + "'";
                return false;
            }
            rec.fs = fs;
        } else if (key == "age") {
            if (val == "NA") {
                rec.age.reset();
            } else {
                double age = 0;
                if (!parse_double(val, age)) {
                    err = "bad age '" + val + "'";
                    return false;
                }
                rec.age = age;
            }
        } else if (key == "sex") {
            const auto s = sex_from_code(val);
            if (!s) {
                err = "bad sex '" + val + "'";
                return false;
            }
            rec.sex = *s;
        } else if (key == "label") {
            label_token = val;
        } else {
            err = "unknown header key '" + key + "'";
            return false;
        }
    }
    if (!(rec.fs > 0)) {
        err = "header missing fs";
        return false;
    }
    if (label_token.empty()) {
        err = "header missing label";
        return false;
    }
    return true;
}

}  // namespace

LoadResult load_dataset(const std::filesystem::path& manifest_path) {
    std::ifstream manifest(manifest_path);
    if (!manifest) {
        throw IoError("cannot open manifest " + manifest_path.string());
    }
    const std::filesystem::path base = manifest_path.parent_path();

    LoadResult result;
    result.dataset.provenance = manifest_path.string();
    std::unordered_set<std::string> seen_ids;

    std::string line;
    while (std::getline(manifest, line)) {
        line = strip(line);
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 2) {
            result.errors.push_back({"", line, "schema error", "malformed manifest line"});
            continue;
        }
        const std::string id = strip(fields[0]);
        const std::string rel = strip(fields[1]);
        const std::filesystem::path path = base / rel;

        if (!seen_ids.insert(id).second) {
            result.errors.push_back({id, path.string(), "schema error", "duplicate id"});
            continue;
        }

        std::ifstream in(path);
        if (!in) {
            result.errors.push_back({id, path.string(), "io error", "cannot open record file"});
            continue;
        }

        EcgRecording rec;
        rec.id = id;
        std::string header, label_token, err;
        if (!std::getline(in, header) || !parse_header(header, rec, label_token, err)) {
            result.errors.push_back({id, path.string(), "schema error",
                                     err.empty() ? "missing header" : err});
            continue;
        }
        const auto label = diagnosis_from_abbrev(label_token);
        if (!label) {
            result.errors.push_back({id, path.string(), "label error",
                                     "unknown label code '" + label_token + "'"});
            continue;
        }
        rec.label = *label;

        bool ok = true;
        std::string row;
        while (std::getline(in, row)) {
            row = strip(row);
            if (row.empty()) continue;
            const auto cols = split(row, ',');
            if (cols.size() != kNumLeads) {
                result.errors.push_back({id, path.string(), "schema error",
                                         "expected 12 channels, got " +
                                             std::to_string(cols.size())});
                ok = false;
                break;
            }
            for (std::size_t c = 0; c < kNumLeads; ++c) {
                double v = 0;
                if (!parse_double(cols[c], v)) {
                    result.errors.push_back({id, path.string(), "schema error",
                                             "bad sample value '" + cols[c] + "'"});
                    ok = false;
                    break;
                }
                rec.channels[c].push_back(v);
            }
            if (!ok) break;
        }
        if (!ok) continue;

        try {
            rec.validate();
        } catch (const SchemaError& e) {
            result.errors.push_back({id, path.string(), "schema error", e.what()});
            continue;
        }
        result.dataset.recordings.push_back(std::move(rec));
    }
    return result;
}

void write_dataset(const Dataset& ds, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir / "records", ec);
    if (ec) throw IoError("cannot create " + (dir / "records").string());

    std::ofstream manifest(dir / "manifest.csv");
    if (!manifest) throw IoError("cannot write manifest in " + dir.string());

    char buf[32];
    for (const auto& rec : ds.recordings) {
        const std::string rel = "records/" + rec.id + ".csv";
        manifest << rec.id << "," << rel << "\n";

        std::ofstream out(dir / rel);
        if (!out) throw IoError("cannot write record file " + (dir / rel).string());
        out << "fs=" << static_cast<long long>(rec.fs) << ",age=";
        if (rec.age) {
            out << static_cast<long long>(*rec.age);
        } else {
            out << "NA";
        }
        out << ",sex=" << sex_code(rec.sex) << ",label=" << to_abbrev(rec.label) << "\n";

        const std::size_t d = rec.length();
        for (std::size_t s = 0; s < d; ++s) {
            for (std::size_t c = 0; c < kNumLeads; ++c) {
                std::snprintf(buf, sizeof buf, "%.17g", rec.channels[c][s]);
                if (c) out << ',';
                out << buf;
            }
            out << '\n';
        }
    }
}

}  // namespace fedecg
