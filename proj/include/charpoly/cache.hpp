#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace charpoly {

inline const char* engine_version() { return "charpoly 0.1.0"; }

/// Content-addressed JSON artifact store under <dir>/<kind>/<key>.json.
/// Entries embed the engine version; stale entries are recomputed.  Writes
/// go through a temp file and rename, so readers never see partial files.
class Cache {
  public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::filesystem::path path_for(const std::string& kind, const std::string& key) const {
        return dir_ / kind / (key + ".json");
    }

    std::optional<json> load(const std::string& kind, const std::string& key) const {
        std::filesystem::path p = path_for(kind, key);
        std::ifstream in(p);
        if (!in)
            return std::nullopt;
        json entry;
        try {
            in >> entry;
        } catch (const json::exception&) {
            return std::nullopt;
        }
        if (entry.value("engine_version", "") != engine_version() ||
            entry.value("kind", "") != kind || entry.value("key", "") != key)
            return std::nullopt;
        if (!entry.contains("payload"))
            return std::nullopt;
        return entry["payload"];
    }

    void store(const std::string& kind, const std::string& key, const json& payload,
               int trunc = -1) const {
        json entry{{"kind", kind},
                   {"key", key},
                   {"engine_version", engine_version()},
                   {"payload", payload}};
        if (trunc >= 0)
            entry["trunc"] = trunc;
        std::filesystem::path p = path_for(kind, key);
        std::filesystem::create_directories(p.parent_path());
        std::filesystem::path tmp = p;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out)
                throw error("Cache: cannot write " + tmp.string());
            out << entry.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, p);
    }

    /// Serialized bytes of an entry as stored (for byte-stability checks).
    static std::string serialize(const std::string& kind, const std::string& key,
                                 const json& payload, int trunc = -1) {
        json entry{{"kind", kind},
                   {"key", key},
                   {"engine_version", engine_version()},
                   {"payload", payload}};
        if (trunc >= 0)
            entry["trunc"] = trunc;
        return entry.dump(2) + "\n";
    }

    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
};

inline std::string ahat_cache_key(const Partition& lambda) {
    std::string s = "lam";
    for (size_t i = 0; i < lambda.parts().size(); ++i)
        s += (i ? "-" : "") + std::to_string(lambda.parts()[i]);
    if (lambda.empty())
        s += "0";
    return s;
}

inline std::string ptau_cache_key(const ChainType& tau) {
    std::string s = "nu" + std::to_string(tau.rank) + "_mu";
    for (size_t i = 0; i < tau.mu.parts().size(); ++i)
        s += (i ? "-" : "") + std::to_string(tau.mu.parts()[i]);
    if (tau.mu.empty())
        s += "0";
    return s;
}

} // namespace charpoly
