#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace superlie {

enum class Status { pass, fail, skip };

std::string to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string detail;
    nlohmann::json witness;   // null when there is nothing to show
};

/// Named pass/fail/skip results plus the parameters that produced them.
class Report {
public:
    Report() = default;
    explicit Report(std::string subject) : subject_(std::move(subject)) {}

    void add(Check c);
    void pass(std::string name, std::string detail = {}, nlohmann::json witness = nullptr);
    void fail(std::string name, std::string detail, nlohmann::json witness = nullptr);
    void skip(std::string name, std::string detail);
    /// Pass or fail depending on ok.
    void expect(bool ok, std::string name, std::string detail, nlohmann::json witness = nullptr);
    void merge(const Report& other);
    /// Merges checks with their names prefixed; parameters are not copied.
    void merge(const Report& other, const std::string& prefix);

    bool passed() const;
    std::size_t count(Status s) const;
    const std::string& subject() const { return subject_; }
    const std::vector<Check>& checks() const { return checks_; }
    const Check* find(const std::string& name) const;
    nlohmann::json& params() { return params_; }
    const nlohmann::json& params() const { return params_; }

    /// Checks sorted by name; deterministic for deterministic inputs.
    nlohmann::json to_json() const;
    std::string text() const;

private:
    std::string subject_;
    std::vector<Check> checks_;
    nlohmann::json params_ = nlohmann::json::object();
};

}  // namespace superlie
