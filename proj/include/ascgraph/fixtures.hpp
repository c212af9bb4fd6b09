#pragma once
// Search-derived base graphs frozen as graph6 files. Each fixture ships with
// a sidecar .txt stating the predicate and search space that produced it;
// tools/make_fixtures regenerates and re-verifies the set.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "ascgraph/graph.hpp"

namespace ascgraph {

class FixtureStore {
public:
    FixtureStore() = default;

    explicit FixtureStore(const std::string& dir) : dir_(dir) {
        namespace fs = std::filesystem;
        if (!fs::exists(dir)) return;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().extension() != ".g6") continue;
            std::ifstream in(entry.path());
            std::string line;
            if (!std::getline(in, line) || line.empty()) continue;
            graphs_.emplace(entry.path().stem().string(), from_graph6(line));
        }
    }

    bool has(const std::string& name) const { return graphs_.count(name) > 0; }

    const Graph& get(const std::string& name) const {
        auto it = graphs_.find(name);
        if (it == graphs_.end())
            throw std::runtime_error("fixture '" + name + "' not found under " + dir_);
        return it->second;
    }

    const std::string& dir() const { return dir_; }

    static const FixtureStore& default_store() {
        static FixtureStore store = [] {
            if (const char* env = std::getenv("ASCGRAPH_FIXTURE_DIR")) return FixtureStore(env);
#ifdef ASCGRAPH_FIXTURE_DIR
            return FixtureStore(ASCGRAPH_FIXTURE_DIR);
#else
            return FixtureStore("data/fixtures");
#endif
        }();
        return store;
    }

private:
    std::string dir_;
    std::map<std::string, Graph> graphs_;
};

}  // namespace ascgraph
