#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ballotwire::csv {

struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based physical line where the record starts
};

/// Streaming RFC-4180 reader. Quoted fields may span lines and contain
/// doubled quotes; whitespace around unquoted fields is trimmed. Every
/// record must be valid UTF-8, otherwise EncodingError names its line.
class Reader {
public:
    explicit Reader(std::istream& in, bool skip_comment_lines = false);

    std::optional<Record> next();

private:
    bool read_line(std::string& out);

    std::istream& in_;
    bool skip_comments_;
    std::size_t line_ = 0;
    bool first_ = true;
};

/// Whole-file convenience: header + data records. Throws EmptyFile when the
/// file has no header row, IoError when it cannot be opened.
struct Table {
    Record header;
    std::vector<Record> rows;

    /// Index of `name` in the header, or nullopt.
    std::optional<std::size_t> column(std::string_view name) const;
};

Table read_file(const std::filesystem::path& path, bool skip_comment_lines = false);

bool is_valid_utf8(std::string_view text) noexcept;

/// Quotes a field when it contains a delimiter, quote, newline, or edge space.
std::string escape(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

}  // namespace ballotwire::csv
