#include "resultants/calibration.hpp"
#include "resultants/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace resultants {

Rational reference_constant(const std::string& method, const std::vector<int>& shape,
                            const std::function<Rational()>& compute)
{
    static std::mutex mutex;
    static std::map<std::pair<std::string, std::vector<int>>, Rational> cache;
    auto key = std::make_pair(method, shape);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Rational value = compute();
    if (is_zero(value)) throw DegenerateError(method + " vanishes on the reference system");
    std::lock_guard lock(mutex);
    return cache.emplace(std::move(key), value).first->second;
}

}  // namespace resultants
