#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2star {

// A named coordinate chart. Variable order is fixed and acts as the
// tie-break order for every enumeration and rendering in the library.
class Chart {
  public:
    Chart() = default;
    Chart(std::string name, std::vector<std::string> variables)
        : data_(std::make_shared<Data>(Data{std::move(name), std::move(variables)})) {
        const auto& v = data_->variables;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j])
                    throw std::invalid_argument("chart has duplicate variable: " + v[i]);
    }

    const std::string& name() const { return data_->name; }
    const std::vector<std::string>& variables() const { return data_->variables; }
    size_t size() const { return data_->variables.size(); }
    const std::string& variable(size_t i) const { return data_->variables.at(i); }

    int index_of(const std::string& var) const {
        const auto& v = data_->variables;
        auto it = std::find(v.begin(), v.end(), var);
        if (it == v.end())
            throw std::invalid_argument("variable " + var + " not in chart " + name());
        return static_cast<int>(it - v.begin());
    }

    friend bool operator==(const Chart& a, const Chart& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->name == b.data_->name && a.data_->variables == b.data_->variables;
    }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

  private:
    struct Data {
        std::string name;
        std::vector<std::string> variables;
    };
    std::shared_ptr<const Data> data_;
};

// GL(2) as an open subset of 4-space, matrix entries (a b; c d).
inline const Chart& ordinary_chart() {
    static const Chart c("ordinary", {"a", "b", "c", "d"});
    return c;
}

// Logarithmic coordinates (alpha beta; gamma delta) with T = exp(X).
inline const Chart& exponential_chart() {
    static const Chart c("exponential", {"alpha", "beta", "gamma", "delta"});
    return c;
}

inline void require_same_chart(const Chart& a, const Chart& b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": chart mismatch (" + a.name() +
                                    " vs " + b.name() + ")");
}

} // namespace gl2star
