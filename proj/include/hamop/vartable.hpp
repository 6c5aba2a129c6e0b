#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hamop/error.hpp"

namespace hamop {

enum class VarKind { coord, param };

// Ordered list of variable names, split into coordinate variables and
// parameters.  Append-only: indices handed out stay valid for the whole
// session, so polynomials can key monomials by index.  The index order is
// the monomial order's variable order.
class VarTable {
public:
    VarTable() = default;

    int add(const std::string& name, VarKind kind) {
        if (by_name_.count(name))
            throw Error("VarTable: duplicate variable '" + name + "'");
        names_.push_back(name);
        kinds_.push_back(kind);
        by_name_[name] = static_cast<int>(names_.size()) - 1;
        return static_cast<int>(names_.size()) - 1;
    }

    int index_of(const std::string& name) const {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? -1 : it->second;
    }

    int require(const std::string& name) const {
        int i = index_of(name);
        if (i < 0) throw UnknownVariable("unknown variable '" + name + "'");
        return i;
    }

    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    VarKind kind(int i) const { return kinds_.at(static_cast<size_t>(i)); }
    bool is_coord(int i) const { return kind(i) == VarKind::coord; }
    int size() const { return static_cast<int>(names_.size()); }

    std::vector<int> coord_vars() const {
        std::vector<int> r;
        for (int i = 0; i < size(); ++i)
            if (kinds_[static_cast<size_t>(i)] == VarKind::coord) r.push_back(i);
        return r;
    }

    std::vector<int> param_vars() const {
        std::vector<int> r;
        for (int i = 0; i < size(); ++i)
            if (kinds_[static_cast<size_t>(i)] == VarKind::param) r.push_back(i);
        return r;
    }

    bool same_layout(const VarTable& o) const {
        return names_ == o.names_ && kinds_ == o.kinds_;
    }

    static std::shared_ptr<VarTable> make(const std::vector<std::string>& coords,
                                          const std::vector<std::string>& params = {}) {
        auto t = std::make_shared<VarTable>();
        for (auto& c : coords) t->add(c, VarKind::coord);
        for (auto& p : params) t->add(p, VarKind::param);
        return t;
    }

    // standard chart table u1..un (+ params)
    static std::shared_ptr<VarTable> coords_u(int n, const std::vector<std::string>& params = {}) {
        std::vector<std::string> cs;
        cs.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) cs.push_back("u" + std::to_string(i));
        return make(cs, params);
    }

private:
    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
    std::unordered_map<std::string, int> by_name_;
};

using TablePtr = std::shared_ptr<const VarTable>;

}  // namespace hamop
