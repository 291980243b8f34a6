#pragma once

#include "spalg/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace spalg {

enum class VarKind { Even, Odd };

struct VarRef {
    VarKind kind;
    std::size_t index; // into even_names() or odd_names()
};

// Immutable chart of an (m,n)-dimensional polynomial superdomain. Even
// variables come in symplectic pairs, in declaration order: pair i is
// (even[2i], even[2i+1]), conventionally (q_i, p_i). Declaration order is
// frozen at construction; it defines the canonical monomial order.
class VariableTable {
public:
    VariableTable(std::vector<std::string> even_vars, std::vector<std::string> odd_vars)
        : even_(std::move(even_vars)), odd_(std::move(odd_vars)) {
        if (even_.size() % 2 != 0)
            throw Error("even variable count must be 2m (full symplectic pairs)");
        for (std::size_t i = 0; i < even_.size(); ++i)
            insert(even_[i], {VarKind::Even, i});
        for (std::size_t a = 0; a < odd_.size(); ++a)
            insert(odd_[a], {VarKind::Odd, a});
        digest_ = compute_digest();
    }

    static std::shared_ptr<const VariableTable> create(std::vector<std::string> even_vars,
                                                       std::vector<std::string> odd_vars) {
        return std::make_shared<const VariableTable>(std::move(even_vars), std::move(odd_vars));
    }

    std::size_t even_count() const { return even_.size(); }
    std::size_t odd_count() const { return odd_.size(); }
    std::size_t pair_count() const { return even_.size() / 2; }

    const std::string& even_name(std::size_t i) const { return even_.at(i); }
    const std::string& odd_name(std::size_t a) const { return odd_.at(a); }
    const std::vector<std::string>& even_names() const { return even_; }
    const std::vector<std::string>& odd_names() const { return odd_; }

    std::optional<VarRef> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    VarRef require(const std::string& name) const {
        auto ref = find(name);
        if (!ref) throw UnknownVariableError(name);
        return *ref;
    }

    // FNV-1a over the declaration list; used to detect table mismatches and
    // stamped into the machine encoding.
    std::uint64_t digest() const { return digest_; }

    bool same_as(const VariableTable& other) const { return digest_ == other.digest_; }

private:
    void insert(const std::string& name, VarRef ref) {
        if (name.empty()) throw Error("empty variable name");
        if (!by_name_.emplace(name, ref).second)
            throw Error("duplicate variable name: " + name);
    }

    std::uint64_t compute_digest() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](const std::string& s, char tag) {
            h ^= static_cast<std::uint64_t>(tag);
            h *= 1099511628211ull;
            for (char c : s) {
                h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
                h *= 1099511628211ull;
            }
        };
        for (const auto& name : even_) mix(name, 'e');
        for (const auto& name : odd_) mix(name, 'o');
        return h;
    }

    std::vector<std::string> even_;
    std::vector<std::string> odd_;
    std::unordered_map<std::string, VarRef> by_name_;
    std::uint64_t digest_ = 0;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline void require_same_table(const VariableTable& a, const VariableTable& b) {
    if (!a.same_as(b)) throw TableMismatchError();
}

} // namespace spalg
