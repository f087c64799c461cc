#include "ballotwire/csv.hpp"

#include <fstream>

#include "ballotwire/error.hpp"

namespace ballotwire::csv {
namespace {

std::string trim_copy(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return std::string(s);
}

}  // namespace

bool is_valid_utf8(std::string_view text) noexcept {
    const auto* p = reinterpret_cast<const unsigned char*>(text.data());
    const auto* end = p + text.size();
    while (p < end) {
        const unsigned char c = *p;
        int extra = 0;
        char32_t cp = 0;
        if (c < 0x80) {
            ++p;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (end - p <= extra)
            return false;
        for (int i = 1; i <= extra; ++i) {
            if ((p[i] & 0xC0) != 0x80)
                return false;
            cp = (cp << 6) | (p[i] & 0x3F);
        }
        // overlong forms, surrogates, out of range
        if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) || (extra == 3 && cp < 0x10000) ||
            (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
            return false;
        p += extra + 1;
    }
    return true;
}

Reader::Reader(std::istream& in, bool skip_comment_lines) : in_(in), skip_comments_(skip_comment_lines) {}

bool Reader::read_line(std::string& out) {
    if (!std::getline(in_, out))
        return false;
    ++line_;
    if (!out.empty() && out.back() == '\r')
        out.pop_back();
    if (first_) {
        first_ = false;
        if (out.rfind("\xEF\xBB\xBF", 0) == 0)
            out.erase(0, 3);
    }
    return true;
}

std::optional<Record> Reader::next() {
    std::string line;
    do {
        if (!read_line(line))
            return std::nullopt;
    } while (line.empty() || (skip_comments_ && line.front() == '#'));

    Record rec;
    rec.line = line_;
    std::string field;
    bool quoted = false;      // inside a quoted section
    bool was_quoted = false;  // current field began with a quote
    std::size_t i = 0;
    for (;;) {
        if (i >= line.size()) {
            if (quoted) {
                field.push_back('\n');
                if (!read_line(line))
                    break;  // unterminated quote at EOF: keep what we have
                i = 0;
                continue;
            }
            break;
        }
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == ',') {
            rec.fields.push_back(was_quoted ? field : trim_copy(field));
            field.clear();
            was_quoted = false;
        } else if (c == '"' && trim_copy(field).empty() && !was_quoted) {
            field.clear();
            quoted = true;
            was_quoted = true;
        } else if (!was_quoted) {
            field.push_back(c);
        }
        ++i;
    }
    rec.fields.push_back(was_quoted ? field : trim_copy(field));

    for (const auto& f : rec.fields) {
        if (!is_valid_utf8(f))
            throw Error(ErrorKind::EncodingError, "invalid UTF-8 at line " + std::to_string(rec.line));
    }
    return rec;
}

std::optional<std::size_t> Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.fields.size(); ++i)
        if (header.fields[i] == name)
            return i;
    return std::nullopt;
}

Table read_file(const std::filesystem::path& path, bool skip_comment_lines) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    Reader reader(in, skip_comment_lines);
    Table table;
    auto header = reader.next();
    if (!header)
        throw Error(ErrorKind::EmptyFile, path.string() + " has no header row");
    table.header = std::move(*header);
    while (auto rec = reader.next())
        table.rows.push_back(std::move(*rec));
    return table;
}

std::string escape(std::string_view field) {
    const bool needs = field.find_first_of(",\"\n\r") != std::string_view::npos ||
                       (!field.empty() && (field.front() == ' ' || field.back() == ' ' ||
                                           field.front() == '\t' || field.back() == '\t'));
    if (!needs)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out.push_back(',');
        out += escape(fields[i]);
    }
    return out;
}

}  // namespace ballotwire::csv
