#include "json_access.hpp"

#include <fstream>

namespace equil::bench::detail {

Node Node::at(const std::string& key) const {
    require_object();
    if (!j_->contains(key))
        throw ConfigError(path_ + "/" + key, "missing required field");
    return Node((*j_)[key], path_ + "/" + key);
}

Node Node::at(std::size_t index) const {
    require_array();
    if (index >= j_->size())
        throw ConfigError(path_ + "/" + std::to_string(index), "index out of range");
    return Node((*j_)[index], path_ + "/" + std::to_string(index));
}

void Node::require_object() const {
    if (!j_->is_object())
        fail("expected an object");
}

void Node::require_array() const {
    if (!j_->is_array())
        fail("expected an array");
}

void Node::require_keys(std::initializer_list<const char*> allowed) const {
    require_object();
    for (const auto& [key, value] : j_->items()) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || key == a;
        if (!ok)
            throw ConfigError(path_ + "/" + key, "unknown field");
    }
}

double Node::number() const {
    if (!j_->is_number())
        fail("expected a number");
    return j_->get<double>();
}

std::size_t Node::count() const {
    if (!j_->is_number_integer() || j_->get<long long>() < 0)
        fail("expected a nonnegative integer");
    return j_->get<std::size_t>();
}

std::uint64_t Node::u64() const {
    if (!j_->is_number_integer() || (j_->is_number_integer() && !j_->is_number_unsigned() &&
                                     j_->get<long long>() < 0))
        fail("expected a nonnegative integer");
    return j_->get<std::uint64_t>();
}

std::string Node::string() const {
    if (!j_->is_string())
        fail("expected a string");
    return j_->get<std::string>();
}

bool Node::boolean() const {
    if (!j_->is_boolean())
        fail("expected true or false");
    return j_->get<bool>();
}

double Node::number_or(const std::string& key, double fallback) const {
    return has(key) ? at(key).number() : fallback;
}

std::size_t Node::count_or(const std::string& key, std::size_t fallback) const {
    return has(key) ? at(key).count() : fallback;
}

std::string Node::string_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? at(key).string() : fallback;
}

namespace {

quantum::Complex parse_entry(const Node& n) {
    if (n.json().is_number())
        return {n.number(), 0.0};
    if (n.json().is_array() && n.json().size() == 2)
        return {n.at(std::size_t{0}).number(), n.at(std::size_t{1}).number()};
    n.fail("expected a number or a [real, imag] pair");
}

}  // namespace

namespace {

quantum::CMatrix parse_rows(const Node& n) {
    n.require_array();
    const std::size_t rows = n.json().size();
    if (rows == 0)
        n.fail("matrix must be nonempty");
    quantum::CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
        const Node row = n.at(i);
        row.require_array();
        if (row.json().size() != rows)
            row.fail("matrix must be square");
        for (std::size_t k = 0; k < rows; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = parse_entry(row.at(k));
    }
    return m;
}

}  // namespace

quantum::CMatrix parse_matrix(const Node& n, const std::filesystem::path& base_dir) {
    if (n.json().is_object()) {
        n.require_keys({"file"});
        const std::filesystem::path file = base_dir / n.at("file").string();
        std::ifstream in(file);
        if (!in)
            throw ConfigError(n.path() + "/file", "cannot open " + file.string());
        nlohmann::json loaded;
        try {
            in >> loaded;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(n.path() + "/file", std::string("invalid JSON: ") + e.what());
        }
        return parse_rows(Node(loaded, n.path() + "/file:" + file.string()));
    }
    n.require_array();
    if (n.json().size() > kMaxInlineDimension)
        n.fail("inline matrices are limited to dimension 32; use {\"file\": ...}");
    return parse_rows(n);
}

quantum::CVector parse_vector(const Node& n) {
    n.require_array();
    if (n.json().empty())
        n.fail("vector must be nonempty");
    quantum::CVector v(static_cast<Eigen::Index>(n.json().size()));
    for (std::size_t i = 0; i < n.json().size(); ++i)
        v[static_cast<Eigen::Index>(i)] = parse_entry(n.at(i));
    return v;
}

nlohmann::json matrix_to_json(const quantum::CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            row.push_back({m(i, k).real(), m(i, k).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace equil::bench::detail
