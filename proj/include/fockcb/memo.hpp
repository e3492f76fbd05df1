#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace fockcb {

/// Map of immutable values with shared reads and exclusive insertion. When
/// two threads compute the same key, the first insertion wins.
template <class Key, class Value>
class Memo {
public:
    std::shared_ptr<const Value> find(const Key& k) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : it->second;
    }

    std::shared_ptr<const Value> insert(const Key& k, std::shared_ptr<const Value> v)
    {
        std::unique_lock lock(mutex_);
        return map_.try_emplace(k, std::move(v)).first->second;
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const Value>> map_;
};

}  // namespace fockcb
