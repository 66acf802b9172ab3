#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "idp/metrics.hpp"

namespace idp {

/// One labeled method. `method_id` is file path + ':' + qualified name and
/// is unique within a project dataset. `sloc` duplicates the metric for
/// reporting convenience.
struct MethodRecord {
    std::string project;
    std::string method_id;
    MetricVector metrics;
    int sloc = 0;
    bool faulty = false;

    bool operator==(const MethodRecord&) const = default;
};

struct ProjectDataset {
    std::string project;
    std::vector<MethodRecord> records;  // canonical on-disk order

    bool operator==(const ProjectDataset&) const = default;
};

/// CSV schema, in column order:
///   project, method_id, <numeric metrics>, <count metrics>, <category
///   flags>, faulty
/// per MetricRegistry::standard() names. Booleans are 0/1, header row is
/// mandatory, fields must not contain commas or newlines. Lines starting
/// with '#' are ignored (tools may prepend provenance comments).
std::vector<std::string> metrics_csv_header();

/// Loads records (throws DataError on a missing/unknown column, a negative
/// value, a duplicate method_id or an unparsable row, naming the row).
std::vector<MethodRecord> load_metrics_csv(const std::string& path);
std::vector<MethodRecord> load_metrics_csv(std::istream& in, const std::string& display_name);

void save_metrics_csv(const std::vector<MethodRecord>& records, const std::string& path,
                      const std::string& provenance_comment = "");
void save_metrics_csv(const std::vector<MethodRecord>& records, std::ostream& out,
                      const std::string& provenance_comment = "");

/// Marks every record whose method_id appears in `fault_labels` as faulty
/// (set membership, so duplicate ids are idempotent). Returns the label ids
/// that matched no record, in first-seen order — a warning, not an error.
std::vector<std::string> attach_labels(std::vector<MethodRecord>& records,
                                       const std::vector<std::string>& fault_labels);

/// Fault-label file: one method_id per line, blank lines ignored.
std::vector<std::string> load_fault_labels(const std::string& path);

ProjectDataset load_dataset(const std::string& path);
void save_dataset(const ProjectDataset& dataset, const std::string& path);

}  // namespace idp
