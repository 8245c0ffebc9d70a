#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "equil/errors.hpp"
#include "equil/quantum/linalg.hpp"

namespace equil::bench::detail {

// JSON node paired with its location in the scenario file, so every error
// names the field that caused it.
class Node {
public:
    Node(const nlohmann::json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const nlohmann::json& json() const { return *j_; }
    const std::string& path() const { return path_; }

    bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }
    Node at(const std::string& key) const;
    Node at(std::size_t index) const;

    [[noreturn]] void fail(const std::string& what) const { throw ConfigError(path_, what); }

    void require_object() const;
    void require_array() const;
    // Rejects keys outside `allowed`.
    void require_keys(std::initializer_list<const char*> allowed) const;

    double number() const;
    std::size_t count() const;
    std::uint64_t u64() const;
    std::string string() const;
    bool boolean() const;

    double number_or(const std::string& key, double fallback) const;
    std::size_t count_or(const std::string& key, std::size_t fallback) const;
    std::string string_or(const std::string& key, const std::string& fallback) const;

private:
    const nlohmann::json* j_;
    std::string path_;
};

// Largest dimension for which matrices may be given inline.
inline constexpr std::size_t kMaxInlineDimension = 32;

// Matrix as rows of (re, im) pairs (plain numbers are read as real), or
// {"file": path} naming a JSON file that holds such a matrix.
quantum::CMatrix parse_matrix(const Node& n, const std::filesystem::path& base_dir);
quantum::CVector parse_vector(const Node& n);
nlohmann::json matrix_to_json(const quantum::CMatrix& m);

}  // namespace equil::bench::detail
