#include "superlie/report.hpp"

#include <algorithm>
#include <sstream>

namespace superlie {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skip";
    }
}

void Report::add(Check c) { checks_.push_back(std::move(c)); }

void Report::pass(std::string name, std::string detail, nlohmann::json witness) {
    add({std::move(name), Status::pass, std::move(detail), std::move(witness)});
}

void Report::fail(std::string name, std::string detail, nlohmann::json witness) {
    add({std::move(name), Status::fail, std::move(detail), std::move(witness)});
}

void Report::skip(std::string name, std::string detail) {
    add({std::move(name), Status::skip, std::move(detail), nullptr});
}

void Report::expect(bool ok, std::string name, std::string detail, nlohmann::json witness) {
    add({std::move(name), ok ? Status::pass : Status::fail, std::move(detail), std::move(witness)});
}

void Report::merge(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    for (auto it = other.params_.begin(); it != other.params_.end(); ++it)
        if (!params_.contains(it.key())) params_[it.key()] = it.value();
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (Check c : other.checks_) {
        c.name = prefix + c.name;
        checks_.push_back(std::move(c));
    }
}

bool Report::passed() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::vector<const Check*> sorted(const std::vector<Check>& checks) {
    std::vector<const Check*> v;
    for (const auto& c : checks) v.push_back(&c);
    std::stable_sort(v.begin(), v.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
    return v;
}

}  // namespace

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["subject"] = subject_;
    j["passed"] = passed();
    j["params"] = params_;
    j["checks"] = nlohmann::json::array();
    for (const Check* c : sorted(checks_)) {
        nlohmann::json e{{"name", c->name}, {"status", to_string(c->status)}};
        if (!c->detail.empty()) e["detail"] = c->detail;
        if (!c->witness.is_null()) e["witness"] = c->witness;
        j["checks"].push_back(std::move(e));
    }
    return j;
}

std::string Report::text() const {
    std::ostringstream os;
    if (!subject_.empty()) os << subject_ << '\n';
    for (auto it = params_.begin(); it != params_.end(); ++it) os << "  " << it.key() << ": " << it.value().dump() << '\n';
    for (const Check* c : sorted(checks_)) {
        os << "  [" << to_string(c->status) << "] " << c->name;
        if (!c->detail.empty()) os << ": " << c->detail;
        os << '\n';
        if (c->status == Status::fail && !c->witness.is_null()) os << "      witness: " << c->witness.dump() << '\n';
    }
    os << (passed() ? "PASS" : "FAIL") << " (" << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
       << count(Status::skip) << " skip)\n";
    return os.str();
}

}  // namespace superlie
