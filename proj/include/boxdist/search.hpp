#pragma once

/**
 * @file search.hpp
 * @brief Exact and anytime search for maximum s-distance subsets of a box.
 *
 * Two engines:
 *  - dynamic: branch and bound over box points in canonical (lexicographic)
 *    order, maintaining the running palette, with candidate filtering, a
 *    remaining-candidates bound and an anchor-sphere counting bound;
 *  - enumerate-palettes: for each s-subset of the global distance palette,
 *    maximum clique (coloring-bounded branch and bound) on the graph joining
 *    pairs at palette distances.
 *
 * Determinism: for a fixed config the result (including node counts) does
 * not depend on worker_count. Parallel work is decomposed into independent
 * root subtrees with an even node-budget split and no shared search state;
 * reduction folds subtree results in canonical order. Setting a wall-clock
 * time budget is the one escape hatch that trades this guarantee away.
 */

#include <cstdint>
#include <memory>
#include <vector>

#include "boxdist/geometry.hpp"
#include "boxdist/rational.hpp"

namespace boxdist {

namespace detail {
struct PreparedBox;
}

struct SearchConfig {
    enum class Mode { exact, anytime };
    enum class PaletteMode { dynamic, enumerate_palettes };

    Mode mode = Mode::exact;
    PaletteMode palette_mode = PaletteMode::dynamic;
    std::uint64_t node_budget = 500'000'000;  // > 0
    double time_budget_seconds = 0;             // 0 = unlimited; breaks determinism if set
    bool symmetry_reduction = true;
    unsigned worker_count = 1;                  // dynamic mode only
};

struct SearchResult {
    std::size_t best_size;
    PointSet witness;
    bool optimal;  // true only for a completed exact-mode run
    std::uint64_t nodes_explored;
    SquaredDistancePalette palette_of_witness;

    bool operator==(const SearchResult& o) const {
        return best_size == o.best_size && witness == o.witness && optimal == o.optimal &&
               nodes_explored == o.nodes_explored &&
               palette_of_witness == o.palette_of_witness;
    }
};

/// All squared distances realized between distinct points of the box.
SquaredDistancePalette global_palette(const Box& box);

/// Amortizes point enumeration and the pairwise distance table across many
/// searches on the same box (an s-sweep rebuilds nothing).
class BoxSearcher {
public:
    explicit BoxSearcher(const Box& box);

    const Box& box() const;
    SquaredDistancePalette global_palette() const;
    SearchResult search(std::size_t s, const SearchConfig& cfg) const;

private:
    std::shared_ptr<const detail::PreparedBox> prep_;
};

/// Maximum subset of the box whose palette has size <= s. Exact mode
/// certifies optimality by exhausted branch and bound; budget exhaustion
/// degrades to an anytime result with optimal = false. Requires s >= 1.
SearchResult search_max(const Box& box, std::size_t s, const SearchConfig& cfg);

/// Maximum subset of the box whose pairwise squared distances all lie in
/// the given palette. The palette must be a subset of global_palette(box).
SearchResult max_clique_for_palette(const Box& box, const SquaredDistancePalette& palette,
                                    const SearchConfig& cfg);

struct ProbeReport {
    unsigned n;
    unsigned q;
    std::size_t s;
    SearchResult search;
    BigInt monomial_count;  // conjectured cap
    BigInt theorem_bound;   // 2 * monomial_count
    bool conjecture_consistent;  // best_size <= monomial_count (recorded)
    bool theorem_consistent;     // best_size <= theorem_bound (a violation is a bug)
};

/// Runs search_max on the box and compares against the counting caps.
/// The box must have dimension n and side size q.
ProbeReport conjecture_probe(unsigned n, unsigned q, std::size_t s, const Box& box,
                             const SearchConfig& cfg);

}  // namespace boxdist
