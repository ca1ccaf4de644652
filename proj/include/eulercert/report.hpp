#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace eulercert {

// One verified statement: what was checked, at which index, and both sides
// rendered exactly. Kept even on success so reports are auditable.
struct CheckResult {
    std::string check;
    long n = 0;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct Report {
    std::vector<CheckResult> items;

    bool all_pass() const {
        return std::all_of(items.begin(), items.end(), [](CheckResult const& c) { return c.pass; });
    }

    void add(std::string check, long n, std::string expected, std::string got) {
        bool const ok = expected == got;
        items.push_back({std::move(check), n, std::move(expected), std::move(got), ok});
    }

    void add_result(std::string check, long n, std::string expected, std::string got, bool pass) {
        items.push_back({std::move(check), n, std::move(expected), std::move(got), pass});
    }

    void merge(Report other) {
        for (auto& it : other.items) items.push_back(std::move(it));
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (auto const& c : items)
            arr.push_back({{"check", c.check}, {"n", c.n}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
        return arr;
    }

    static Report from_json(nlohmann::json const& arr) {
        Report r;
        for (auto const& j : arr)
            r.items.push_back({j.at("check").get<std::string>(), j.at("n").get<long>(),
                               j.at("expected").get<std::string>(), j.at("got").get<std::string>(),
                               j.at("pass").get<bool>()});
        return r;
    }
};

}  // namespace eulercert
