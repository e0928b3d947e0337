#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace polaract {

/// Shortest round-trip decimal form of v via std::to_chars. Deterministic
/// and locale-independent; the basis of the byte-identical output contract.
std::string format_double(double v);

/// Comma-separated writer: '.' decimal point, LF line endings, UTF-8,
/// no quoting (callers must not pass fields containing commas). Every file
/// starts with a schema-versioned meta line, e.g.
///   # polaract-csv v1 command=evolve channel=bec p=0.3 k=10 ...
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    /// key=value pairs appended to the "# polaract-csv v1" meta line.
    void meta(const std::vector<std::pair<std::string, std::string>>& fields);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& fields);

    bool good() const { return out_.good(); }
    void close() { out_.close(); }

private:
    std::ofstream out_;
};

}  // namespace polaract
