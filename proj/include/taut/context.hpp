#pragma once

#include <memory>
#include <string>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// An ordered list of variable names. Every polynomial, rational function and
/// operator carries a shared context; cross-module values must match by name
/// and order, never positionally across different contexts.
class Context {
  public:
    explicit Context(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw error("Context: duplicate variable '" + names_[i] + "'");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a variable, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return npos;
    }

    friend bool operator==(const Context& a, const Context& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const Context>(std::move(names));
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where) {
    if (!same_context(a, b)) throw error(std::string(where) + ": variable context mismatch");
}

}  // namespace taut
