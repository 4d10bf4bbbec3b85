#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace rectsym {

/// Thread-safe memo table for a pure function. Values are immutable once
/// inserted; two threads racing on the same key compute identical values.
template <class Key, class Value>
class Memo {
public:
    template <class F>
    const Value& get_or_compute(const Key& key, F&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        Value value = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

}  // namespace rectsym
