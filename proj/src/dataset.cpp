#include "idp/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "idp/error.hpp"

namespace idp {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

int parse_non_negative(const std::string& s, const std::string& column, size_t row,
                       const std::string& name) {
    if (s.empty()) throw DataError(name + " row " + std::to_string(row) + ": empty " + column);
    for (char c : s) {
        if (c < '0' || c > '9') {
            throw DataError(name + " row " + std::to_string(row) + ": column '" + column +
                            "' must be a non-negative integer, got '" + s + "'");
        }
    }
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw DataError(name + " row " + std::to_string(row) + ": column '" + column +
                        "' out of range: '" + s + "'");
    }
}

int parse_bool01(const std::string& s, const std::string& column, size_t row,
                 const std::string& name) {
    if (s == "0") return 0;
    if (s == "1") return 1;
    throw DataError(name + " row " + std::to_string(row) + ": column '" + column +
                    "' must be 0 or 1, got '" + s + "'");
}

void require_plain_field(const std::string& s, const std::string& what) {
    if (s.find(',') != std::string::npos || s.find('\n') != std::string::npos) {
        throw DataError(what + " may not contain commas or newlines: '" + s + "'");
    }
}

}  // namespace

std::vector<std::string> metrics_csv_header() {
    const MetricRegistry& reg = MetricRegistry::standard();
    std::vector<std::string> cols = {"project", "method_id"};
    for (const auto& n : reg.numeric_names) cols.push_back(n);
    for (const auto& n : reg.count_names) cols.push_back(n);
    for (const auto& n : reg.category_names) cols.push_back(n);
    cols.push_back("faulty");
    return cols;
}

std::vector<MethodRecord> load_metrics_csv(std::istream& in, const std::string& name) {
    const MetricRegistry& reg = MetricRegistry::standard();
    const std::vector<std::string> expected = metrics_csv_header();

    std::string line;
    size_t row = 0;
    // Header (skipping leading comment lines).
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line[0] == '#') continue;
        header = split_csv_line(line);
        break;
    }
    if (header.empty()) throw DataError(name + ": missing header row");

    for (const auto& col : header) {
        if (std::find(expected.begin(), expected.end(), col) == expected.end()) {
            throw DataError(name + ": unknown column '" + col + "'");
        }
    }
    for (const auto& col : expected) {
        if (std::find(header.begin(), header.end(), col) == header.end()) {
            throw DataError(name + ": missing column '" + col + "'");
        }
    }
    if (header != expected) {
        throw DataError(name + ": columns out of order; expected the documented schema");
    }

    std::vector<MethodRecord> records;
    std::unordered_set<std::string> seen_ids;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != expected.size()) {
            throw DataError(name + " row " + std::to_string(row) + ": expected " +
                            std::to_string(expected.size()) + " fields, got " +
                            std::to_string(f.size()));
        }
        MethodRecord rec;
        size_t c = 0;
        rec.project = f[c++];
        rec.method_id = f[c++];
        rec.metrics.numeric.resize(reg.numeric_count());
        rec.metrics.counts.resize(reg.count_count());
        rec.metrics.categories.resize(reg.category_count());
        for (size_t i = 0; i < reg.numeric_count(); ++i) {
            rec.metrics.numeric[i] = parse_non_negative(f[c], reg.numeric_names[i], row, name);
            ++c;
        }
        for (size_t i = 0; i < reg.count_count(); ++i) {
            rec.metrics.counts[i] = parse_non_negative(f[c], reg.count_names[i], row, name);
            ++c;
        }
        for (size_t i = 0; i < reg.category_count(); ++i) {
            rec.metrics.categories[i] =
                static_cast<uint8_t>(parse_bool01(f[c], reg.category_names[i], row, name));
            ++c;
        }
        rec.faulty = parse_bool01(f[c], "faulty", row, name) != 0;
        rec.sloc = rec.metrics.numeric[metric::kSloc];
        if (!seen_ids.insert(rec.method_id).second) {
            throw DataError(name + " row " + std::to_string(row) + ": duplicate method_id '" +
                            rec.method_id + "'");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<MethodRecord> load_metrics_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open metrics CSV: " + path);
    return load_metrics_csv(in, path);
}

void save_metrics_csv(const std::vector<MethodRecord>& records, std::ostream& out,
                      const std::string& provenance_comment) {
    if (!provenance_comment.empty()) out << "# " << provenance_comment << "\n";
    const std::vector<std::string> header = metrics_csv_header();
    for (size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << "\n";
    for (const MethodRecord& r : records) {
        require_plain_field(r.project, "project");
        require_plain_field(r.method_id, "method_id");
        out << r.project << ',' << r.method_id;
        for (int v : r.metrics.numeric) out << ',' << v;
        for (int v : r.metrics.counts) out << ',' << v;
        for (uint8_t v : r.metrics.categories) out << ',' << (v ? 1 : 0);
        out << ',' << (r.faulty ? 1 : 0) << "\n";
    }
}

void save_metrics_csv(const std::vector<MethodRecord>& records, const std::string& path,
                      const std::string& provenance_comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write metrics CSV: " + path);
    save_metrics_csv(records, out, provenance_comment);
}

std::vector<std::string> attach_labels(std::vector<MethodRecord>& records,
                                       const std::vector<std::string>& fault_labels) {
    std::unordered_set<std::string> known;
    for (const MethodRecord& r : records) known.insert(r.method_id);

    std::unordered_set<std::string> label_set;
    std::vector<std::string> unmatched;
    std::unordered_set<std::string> reported;
    for (const std::string& id : fault_labels) {
        label_set.insert(id);
        if (!known.count(id) && reported.insert(id).second) unmatched.push_back(id);
    }
    for (MethodRecord& r : records) {
        r.faulty = label_set.count(r.method_id) != 0;
    }
    return unmatched;
}

std::vector<std::string> load_fault_labels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open fault-label file: " + path);
    std::vector<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) ids.push_back(line);
    }
    return ids;
}

ProjectDataset load_dataset(const std::string& path) {
    ProjectDataset ds;
    ds.records = load_metrics_csv(path);
    ds.project = ds.records.empty() ? "" : ds.records.front().project;
    return ds;
}

void save_dataset(const ProjectDataset& dataset, const std::string& path) {
    save_metrics_csv(dataset.records, path);
}

}  // namespace idp
