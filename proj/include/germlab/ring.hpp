#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germlab/errors.hpp"

namespace germlab {

/// An ordered list of variable names. Rings compare by value: two rings are
/// the same iff their variable lists coincide (names and order). Copies are
/// cheap (shared immutable payload).
class Ring {
public:
    Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Ring(std::vector<std::string> vars)
        : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {
        for (std::size_t i = 0; i < vars_->size(); ++i)
            for (std::size_t j = i + 1; j < vars_->size(); ++j)
                require((*vars_)[i] != (*vars_)[j], "algebra.DuplicateVariable",
                        "duplicate variable '" + (*vars_)[i] + "' in ring");
    }

    std::size_t size() const { return vars_->size(); }
    const std::string& name(std::size_t i) const { return (*vars_)[i]; }
    const std::vector<std::string>& names() const { return *vars_; }

    std::optional<std::size_t> index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == name) return i;
        return std::nullopt;
    }

    std::size_t index_checked(const std::string& name) const {
        auto i = index(name);
        require(i.has_value(), "algebra.UnknownVariable",
                "variable '" + name + "' not in ring " + to_string());
        return *i;
    }

    bool contains(const std::string& name) const { return index(name).has_value(); }

    /// New ring with `name` appended.
    Ring extended(const std::string& name) const {
        auto vars = *vars_;
        vars.push_back(name);
        return Ring(std::move(vars));
    }

    /// New ring with the named variables removed (order of the rest kept).
    Ring without(const std::vector<std::string>& dropped) const {
        std::vector<std::string> vars;
        for (const auto& v : *vars_) {
            bool drop = false;
            for (const auto& d : dropped)
                if (v == d) drop = true;
            if (!drop) vars.push_back(v);
        }
        return Ring(std::move(vars));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if (i) s += ",";
            s += (*vars_)[i];
        }
        return s + "]";
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

inline void require_same_ring(const Ring& a, const Ring& b) {
    require(a == b, "algebra.RingMismatch",
            "ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace germlab
