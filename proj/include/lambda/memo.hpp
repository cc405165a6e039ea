#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>

namespace lambda {

/// Two-generation cache. New entries go to the young map; when it fills, the
/// old generation is dropped and the young one takes its place. Hits in the
/// old generation are promoted by moving the node, so references handed out
/// stay valid until the next rotate().
template <class Key, class Value, class Hash = std::hash<Key>>
class GenerationalMemo {
public:
    explicit GenerationalMemo(std::size_t limit) : limit_(limit) {}

    const Value* find(const Key& key)
    {
        if (auto it = young_.find(key); it != young_.end())
            return &it->second;
        if (auto it = old_.find(key); it != old_.end()) {
            auto node = old_.extract(it);
            return &young_.insert(std::move(node)).position->second;
        }
        return nullptr;
    }

    template <class K, class V>
    const Value& emplace(K&& key, V&& value)
    {
        return young_.emplace(std::forward<K>(key), std::forward<V>(value)).first->second;
    }

    /// Call only when no reference into the memo is live.
    void rotate()
    {
        if (young_.size() < limit_ / 2)
            return;
        old_ = std::move(young_);
        young_ = {};
    }

    void clear()
    {
        young_.clear();
        old_.clear();
    }

    std::size_t size() const { return young_.size() + old_.size(); }

private:
    std::size_t limit_;
    std::unordered_map<Key, Value, Hash> young_;
    std::unordered_map<Key, Value, Hash> old_;
};

}  // namespace lambda
