#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

namespace testsupport {

inline std::filesystem::path data_dir() { return BALLOTWIRE_DATA_DIR; }
inline std::filesystem::path test_data_dir() { return BALLOTWIRE_TEST_DATA_DIR; }

inline nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("ballotwire-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& contents) const {
        const auto p = path_ / name;
        std::ofstream out(p, std::ios::binary);
        out << contents;
        return p;
    }

private:
    std::filesystem::path path_;
};

}  // namespace testsupport
