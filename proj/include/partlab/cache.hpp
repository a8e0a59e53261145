#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "partlab/common.hpp"
#include "partlab/squared.hpp"

namespace partlab {

// Persistent m -> frequency map. Strictly advisory: a missing, corrupt or
// mismatching file downgrades to recomputation with a warning, never to a
// failure. On load, a sample of entries is recomputed and compared; one bad
// entry discards the whole file.
class FrequencyCache {
public:
    static constexpr int format_version = 1;

    FrequencyCache() = default;
    explicit FrequencyCache(std::string path) : path_(std::move(path)) {}

    static FrequencyCache load(const std::string& path, Int spot_check_sample,
                               std::ostream& warn) {
        FrequencyCache cache(path);
        std::ifstream in(path);
        if (!in) return cache;  // first run: nothing to load
        nlohmann::json j;
        try {
            in >> j;
            if (j.at("format_version").get<int>() != format_version) {
                warn << "warning: cache " << path << " has unknown format version; ignoring\n";
                return cache;
            }
            for (const auto& [key, value] : j.at("entries").items())
                cache.entries_[static_cast<Int>(std::stoll(key))] = value.get<Int>();
        } catch (const std::exception& e) {
            warn << "warning: cache " << path << " is corrupt (" << e.what()
                 << "); recomputing\n";
            cache.entries_.clear();
            return cache;
        }
        if (!cache.spot_check(spot_check_sample, warn)) cache.entries_.clear();
        return cache;
    }

    std::optional<Int> lookup(Int m) const {
        const auto it = entries_.find(m);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void store(Int m, Int f) { entries_[m] = f; }

    bool save(std::ostream& warn) const {
        if (path_.empty()) return false;
        nlohmann::json entries = nlohmann::json::object();
        for (const auto& [m, f] : entries_) entries[std::to_string(m)] = f;
        nlohmann::json j{{"format_version", format_version}, {"entries", entries}};
        std::ofstream out(path_);
        if (!out) {
            warn << "warning: cannot write cache " << path_ << "\n";
            return false;
        }
        out << j.dump(2) << '\n';
        return static_cast<bool>(out);
    }

    const std::map<Int, Int>& entries() const { return entries_; }
    const std::string& path() const { return path_; }

private:
    // Recomputes `sample` entries chosen by a fixed-seed generator and
    // compares them against the stored values.
    bool spot_check(Int sample, std::ostream& warn) {
        if (entries_.empty() || sample <= 0) return true;
        std::vector<Int> keys;
        keys.reserve(entries_.size());
        for (const auto& [m, f] : entries_) keys.push_back(m);
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
        const Int checks = std::min<Int>(sample, static_cast<Int>(keys.size()));
        for (Int i = 0; i < checks; ++i) {
            const Int m = keys[pick(rng)];
            Int fresh = -1;
            try {
                fresh = frequency(m);
            } catch (const std::exception&) {
                // out-of-domain key, e.g. m <= 0: treat as corruption
            }
            if (fresh != entries_[m]) {
                warn << "warning: cache " << path_ << " disagrees with fresh computation at m="
                     << m << " (" << entries_[m] << " vs " << fresh << "); discarding cache\n";
                return false;
            }
        }
        return true;
    }

    std::string path_;
    std::map<Int, Int> entries_;
};

}  // namespace partlab
