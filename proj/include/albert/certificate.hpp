#pragma once

// A certificate is an ordered list of independently re-checkable steps; its verdict is
// the conjunction of the step checks.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "albert/algebra.hpp"
#include "albert/matrix.hpp"

namespace albert {

struct CertificateStep {
    std::string description;
    std::string expected;
    std::string actual;
    bool check = false;
    /// Named matrices and elements the step used, rendered as text.
    std::vector<std::pair<std::string, std::string>> objects;
};

class Certificate {
public:
    explicit Certificate(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<CertificateStep>& steps() const { return steps_; }

    bool verdict() const {
        for (const auto& s : steps_)
            if (!s.check) return false;
        return true;
    }

    /// Records a comparison; returns the check so callers can branch on it.
    bool expect_equal(const std::string& description, const std::string& expected, const std::string& actual,
                      std::vector<std::pair<std::string, std::string>> objects = {}) {
        steps_.push_back({description, expected, actual, expected == actual, std::move(objects)});
        return steps_.back().check;
    }

    bool expect_equal(const std::string& description, const Matrix& expected, const Matrix& actual) {
        return record(description, expected.to_string(), actual.to_string(), expected == actual);
    }

    bool expect_equal(const std::string& description, const Element& expected, const Element& actual) {
        return record(description, expected.to_string(), actual.to_string(), expected == actual);
    }

    bool expect_equal(const std::string& description, const Scalar& expected, const Scalar& actual) {
        return record(description, expected.to_string(), actual.to_string(), expected == actual);
    }

    bool expect_true(const std::string& description, bool ok,
                     std::vector<std::pair<std::string, std::string>> objects = {}) {
        steps_.push_back({description, "true", ok ? "true" : "false", ok, std::move(objects)});
        return ok;
    }

    /// Attaches a rendered object to the most recent step.
    void attach(const std::string& name, const std::string& rendered) {
        if (!steps_.empty()) steps_.back().objects.emplace_back(name, rendered);
    }

    /// Appends another certificate's steps, prefixed with its title.
    void absorb(const Certificate& sub) {
        for (auto s : sub.steps_) {
            s.description = "[" + sub.title_ + "] " + s.description;
            steps_.push_back(std::move(s));
        }
    }

    /// Results other code may build on (operators, recovered parameters).
    std::map<std::string, Matrix> matrices;
    std::map<std::string, Scalar> scalars;

    std::string to_text() const {
        std::ostringstream os;
        os << title_ << "\n";
        std::size_t i = 1;
        for (const auto& s : steps_) {
            os << "  " << i++ << ". [" << (s.check ? "ok" : "FAILED") << "] " << s.description << "\n";
            if (s.check)
                os << "       " << s.actual << "\n";
            else
                os << "       expected " << s.expected << "\n       actual   " << s.actual << "\n";
            for (const auto& [name, text] : s.objects) os << "       " << name << " = " << text << "\n";
        }
        os << "verdict: " << (verdict() ? "verified" : "FAILED") << "\n";
        return os.str();
    }

private:
    bool record(const std::string& description, std::string expected, std::string actual, bool ok) {
        steps_.push_back({description, std::move(expected), std::move(actual), ok, {}});
        return ok;
    }

    std::string title_;
    std::vector<CertificateStep> steps_;
};

}  // namespace albert
