#include "boxdist/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "boxdist/bounds.hpp"

namespace boxdist {

namespace detail {

constexpr std::uint64_t kMaxSearchPoints = 8192;

struct PreparedBox {
    Box box;
    std::vector<Point> pts;  // lexicographic order
    std::size_t n_points;
    std::size_t dim;
    DistanceTable table;

    explicit PreparedBox(const Box& b)
        : box(b),
          pts(b.all_points(kMaxSearchPoints)),
          n_points(pts.size()),
          dim(b.dimension()),
          table(pts) {}
};

}  // namespace detail

namespace {

using detail::PreparedBox;
using Clock = std::chrono::steady_clock;

// Conservative automorphisms of the box, detected rather than assumed:
// coordinate transpositions when two coordinate sets are equal, and
// per-coordinate reversal when the coordinate set is an arithmetic
// progression (both are isometries, so palettes are preserved). A witness
// can always be mapped so that its least point is the least point of its
// orbit, so only orbit-least points need to start one.
std::vector<char> first_allowed_flags(const PreparedBox& prep, bool symmetry_reduction) {
    std::vector<char> allowed(prep.n_points, 1);
    if (!symmetry_reduction) return allowed;
    const Box& box = prep.box;
    const std::size_t n = prep.dim, q = box.side_size(), N = prep.n_points;

    std::vector<std::size_t> rad(n, 1);
    for (std::size_t i = n; i-- > 1;) rad[i - 1] = rad[i] * q;

    std::vector<std::vector<std::size_t>> generators;
    std::vector<std::size_t> idx(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!(box.coordinate_set(a) == box.coordinate_set(b))) continue;
            std::vector<std::size_t> map(N);
            for (std::size_t p = 0; p < N; ++p) {
                std::size_t rest = p;
                for (std::size_t i = 0; i < n; ++i) {
                    idx[i] = rest / rad[i];
                    rest %= rad[i];
                }
                std::swap(idx[a], idx[b]);
                std::size_t out = 0;
                for (std::size_t i = 0; i < n; ++i) out += idx[i] * rad[i];
                map[p] = out;
            }
            generators.push_back(std::move(map));
        }
    for (std::size_t a = 0; a < n; ++a) {
        const auto& set = box.coordinate_set(a);
        bool ap = true;
        for (std::size_t k = 0; k + 2 < q && ap; ++k)
            ap = (set[k + 1] - set[k]) == (set[k + 2] - set[k + 1]);
        if (!ap) continue;
        std::vector<std::size_t> map(N);
        for (std::size_t p = 0; p < N; ++p) {
            const std::size_t ai = (p / rad[a]) % q;
            map[p] = p - ai * rad[a] + (q - 1 - ai) * rad[a];
        }
        generators.push_back(std::move(map));
    }
    if (generators.empty()) return allowed;

    std::vector<std::size_t> root(N);
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& g : generators) {
        for (std::size_t p = 0; p < N; ++p) {
            std::size_t a = find(p), b = find(g[p]);
            if (a != b) root[std::max(a, b)] = std::min(a, b);  // keep least index
        }
    }
    for (std::size_t p = 0; p < N; ++p) allowed[p] = (find(p) == p);
    return allowed;
}

class PaletteBits {
public:
    explicit PaletteBits(std::uint32_t universe) : words_((universe + 63) / 64, 0) {}
    bool test(std::uint32_t id) const { return (words_[id >> 6] >> (id & 63)) & 1u; }
    bool set(std::uint32_t id) {
        std::uint64_t& w = words_[id >> 6];
        const std::uint64_t m = std::uint64_t{1} << (id & 63);
        if (w & m) return false;
        w |= m;
        ++count_;
        return true;
    }
    void clear(std::uint32_t id) {
        words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
        --count_;
    }
    std::uint32_t count() const { return count_; }

private:
    std::vector<std::uint64_t> words_;
    std::uint32_t count_ = 0;
};

struct BestTrack {
    std::size_t size = 0;
    std::vector<std::uint32_t> members;
};

struct SubtreeOutcome {
    BestTrack best;
    std::uint64_t nodes = 0;
    bool truncated = false;
};

// Branch and bound over points in canonical order with a running palette.
class DynamicSearch {
public:
    DynamicSearch(const PreparedBox& prep, std::size_t s, std::uint64_t node_budget,
                  Clock::time_point deadline, bool use_deadline)
        : prep_(prep),
          s_(s),
          budget_(node_budget),
          deadline_(deadline),
          use_deadline_(use_deadline),
          palette_(prep.table.value_count()),
          stamp_(prep.table.value_count(), 0),
          sphere_count_(prep.table.value_count(), 0) {}

    SubtreeOutcome run_root(std::uint32_t first_point, const BestTrack& seed) {
        best_ = seed;
        chosen_.clear();
        chosen_.push_back(first_point);
        // one candidate arena per depth; the outer vector never resizes, so
        // references held across recursion stay valid
        level_cand_.resize(prep_.n_points + 2);
        auto& root_cand = level_cand_[0];
        root_cand.clear();
        for (std::uint32_t r = first_point + 1; r < prep_.n_points; ++r) root_cand.push_back(r);
        rec(0);
        return SubtreeOutcome{best_, nodes_, truncated_};
    }

private:
    void rec(std::size_t level) {
        ++nodes_;
        if (nodes_ > budget_) {
            truncated_ = true;
            return;
        }
        if (use_deadline_ && (nodes_ & 8191) == 0 && Clock::now() > deadline_) {
            truncated_ = true;
            return;
        }
        if (chosen_.size() > best_.size) best_ = BestTrack{chosen_.size(), chosen_};

        const auto& cand = level_cand_[level];
        if (cand.empty()) return;
        if (chosen_.size() + cand.size() <= best_.size) return;
        if (anchor_bound(cand) <= best_.size) return;

        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
            if (chosen_.size() + (cand.size() - idx) <= best_.size) break;
            const std::uint32_t p = cand[idx];

            const std::size_t mark = added_.size();
            bool feasible = true;
            for (std::uint32_t c : chosen_) {
                const std::uint32_t id = prep_.table.id(p, c);
                if (palette_.set(id)) added_.push_back(id);
                if (palette_.count() > s_) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                chosen_.push_back(p);
                filter_candidates(cand, idx + 1, level_cand_[level + 1]);
                rec(level + 1);
                chosen_.pop_back();
            }
            while (added_.size() > mark) {
                palette_.clear(added_.back());
                added_.pop_back();
            }
            if (truncated_) return;
        }
    }

    // keep candidates whose single addition would not push the palette past s
    void filter_candidates(const std::vector<std::uint32_t>& cand, std::size_t from,
                           std::vector<std::uint32_t>& out) {
        out.clear();
        const std::uint32_t slots = static_cast<std::uint32_t>(s_) - palette_.count();
        for (std::size_t i = from; i < cand.size(); ++i) {
            const std::uint32_t r = cand[i];
            ++stamp_gen_;
            std::uint32_t fresh = 0;
            bool ok = true;
            for (std::uint32_t c : chosen_) {
                const std::uint32_t id = prep_.table.id(r, c);
                if (!palette_.test(id) && stamp_[id] != stamp_gen_) {
                    stamp_[id] = stamp_gen_;
                    if (++fresh > slots) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) out.push_back(r);
        }
    }

    // Every future point lies on a sphere around the first chosen point, and
    // the sphere values must fit in the palette budget: at most s distinct
    // values in total, so future points are covered by the spheres of values
    // already in the palette plus the (s - |palette|) largest other spheres.
    std::size_t anchor_bound(const std::vector<std::uint32_t>& cand) {
        const std::uint32_t anchor = chosen_.front();
        touched_.clear();
        for (std::uint32_t r : cand) {
            const std::uint32_t id = prep_.table.id(r, anchor);
            if (sphere_count_[id]++ == 0) touched_.push_back(id);
        }
        std::size_t in_palette = 0;
        others_.clear();
        for (std::uint32_t id : touched_) {
            if (palette_.test(id))
                in_palette += sphere_count_[id];
            else
                others_.push_back(sphere_count_[id]);
            sphere_count_[id] = 0;
        }
        const std::size_t slots = s_ - palette_.count();
        std::size_t extra = 0;
        if (others_.size() <= slots) {
            extra = std::accumulate(others_.begin(), others_.end(), std::size_t{0});
        } else {
            std::nth_element(others_.begin(), others_.begin() + slots, others_.end(),
                             std::greater<>());
            for (std::size_t i = 0; i < slots; ++i) extra += others_[i];
        }
        return chosen_.size() + in_palette + extra;
    }

    const PreparedBox& prep_;
    std::size_t s_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool truncated_ = false;
    Clock::time_point deadline_;
    bool use_deadline_;

    std::vector<std::uint32_t> chosen_;
    PaletteBits palette_;
    std::vector<std::uint32_t> added_;
    std::vector<std::vector<std::uint32_t>> level_cand_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_gen_ = 0;
    std::vector<std::uint32_t> sphere_count_;
    std::vector<std::uint32_t> touched_;
    std::vector<std::uint32_t> others_;
    BestTrack best_;
};

// Max clique with greedy-coloring bound, sequential and deterministic.
class CliqueSolver {
public:
    CliqueSolver(std::size_t n, const std::vector<std::vector<std::uint64_t>>& adj,
                 std::uint64_t budget, Clock::time_point deadline, bool use_deadline)
        : n_(n), adj_(adj), budget_(budget), deadline_(deadline), use_deadline_(use_deadline) {}

    SubtreeOutcome solve(const BestTrack& seed) {
        best_ = seed;
        std::vector<std::uint32_t> all(n_);
        std::iota(all.begin(), all.end(), 0u);
        expand(all);
        return SubtreeOutcome{best_, nodes_, truncated_};
    }

private:
    bool adjacent(std::uint32_t a, std::uint32_t b) const {
        return (adj_[a][b >> 6] >> (b & 63)) & 1u;
    }

    void expand(std::vector<std::uint32_t>& cand) {
        ++nodes_;
        if (nodes_ > budget_) {
            truncated_ = true;
            return;
        }
        if (use_deadline_ && (nodes_ & 8191) == 0 && Clock::now() > deadline_) {
            truncated_ = true;
            return;
        }
        if (cur_.size() > best_.size) best_ = BestTrack{cur_.size(), cur_};
        if (cand.empty()) return;

        // greedy coloring in ascending vertex order; color = clique-size bound
        std::vector<std::uint32_t> color(cand.size());
        std::vector<std::vector<std::uint32_t>> classes;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const std::uint32_t v = cand[i];
            std::uint32_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (std::uint32_t u : classes[c])
                    if (adjacent(v, u)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
            color[i] = c + 1;
        }

        std::vector<std::uint32_t> child;
        for (std::size_t i = cand.size(); i-- > 0;) {
            if (cur_.size() + color[i] <= best_.size) return;
            const std::uint32_t v = cand[i];
            child.clear();
            for (std::size_t j = 0; j < i; ++j)
                if (adjacent(v, cand[j])) child.push_back(cand[j]);
            cur_.push_back(v);
            expand(child);
            cur_.pop_back();
            if (truncated_) return;
        }
    }

    std::size_t n_;
    const std::vector<std::vector<std::uint64_t>>& adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool truncated_ = false;
    Clock::time_point deadline_;
    bool use_deadline_;
    std::vector<std::uint32_t> cur_;
    BestTrack best_;
};

void validate_config(const SearchConfig& cfg) {
    if (cfg.node_budget == 0) throw std::invalid_argument("search: node budget must be positive");
    if (cfg.time_budget_seconds < 0)
        throw std::invalid_argument("search: time budget must be nonnegative");
    if (cfg.worker_count == 0 || cfg.worker_count > 256)
        throw std::invalid_argument("search: worker count must be in [1, 256]");
}

BestTrack greedy_dive(const PreparedBox& prep, std::size_t s) {
    PaletteBits palette(prep.table.value_count());
    BestTrack out;
    std::vector<std::uint32_t> added;
    for (std::uint32_t p = 0; p < prep.n_points; ++p) {
        added.clear();
        bool ok = true;
        for (std::uint32_t c : out.members) {
            const std::uint32_t id = prep.table.id(p, c);
            if (palette.set(id)) added.push_back(id);
            if (palette.count() > s) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.members.push_back(p);
        } else {
            for (std::uint32_t id : added) palette.clear(id);
        }
    }
    out.size = out.members.size();
    return out;
}

SquaredDistancePalette palette_of(const PreparedBox& prep,
                                  const std::vector<std::uint32_t>& members) {
    std::vector<Scalar> vals;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            vals.push_back(prep.table.value(prep.table.id(members[i], members[j])));
    return SquaredDistancePalette(std::move(vals));
}

SearchResult assemble(const PreparedBox& prep, const BestTrack& best, std::uint64_t nodes,
                      bool truncated, const SearchConfig& cfg) {
    std::vector<Point> witness;
    witness.reserve(best.members.size());
    for (std::uint32_t m : best.members) witness.push_back(prep.pts[m]);
    PointSet ws(prep.box, std::move(witness));
    SquaredDistancePalette pal = palette_of(prep, best.members);
    const bool optimal = cfg.mode == SearchConfig::Mode::exact && !truncated;
    return SearchResult{best.size, std::move(ws), optimal, nodes, std::move(pal)};
}

Clock::time_point make_deadline(const SearchConfig& cfg) {
    if (cfg.time_budget_seconds <= 0) return Clock::time_point::max();
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(cfg.time_budget_seconds));
}

SearchResult whole_box_result(const PreparedBox& prep, const SearchConfig& cfg) {
    BestTrack all;
    all.members.resize(prep.n_points);
    std::iota(all.members.begin(), all.members.end(), 0u);
    all.size = prep.n_points;
    return assemble(prep, all, 1, false, cfg);
}

SearchResult run_dynamic(const PreparedBox& prep, std::size_t s, const SearchConfig& cfg) {
    const bool use_deadline = cfg.time_budget_seconds > 0;
    const auto deadline = make_deadline(cfg);

    BestTrack dive = greedy_dive(prep, s);
    std::uint64_t nodes = prep.n_points;  // dive accounting: one node per point
    if (nodes >= cfg.node_budget) return assemble(prep, dive, nodes, true, cfg);

    const std::vector<char> allowed = first_allowed_flags(prep, cfg.symmetry_reduction);

    // Root subtree k fixes pts[k] as the least point of the witness. Cheap
    // worker-count-independent pre-pruning: suffix size, and in dimension 1
    // the anchor spheres are all singletons, so a subtree can never beat
    // 1 + min(s, suffix).
    std::vector<std::uint32_t> roots;
    for (std::uint32_t p = 0; p < prep.n_points; ++p) {
        if (!allowed[p]) continue;
        const std::size_t suffix = prep.n_points - p - 1;
        std::size_t cap = 1 + suffix;
        if (prep.dim == 1) cap = 1 + std::min(s, suffix);
        if (cap <= dive.size) {
            nodes += 1;
            continue;
        }
        roots.push_back(p);
    }

    const std::uint64_t per_job = std::max<std::uint64_t>(
        1, (cfg.node_budget - nodes) / std::max<std::size_t>(1, roots.size()));

    std::vector<SubtreeOutcome> outcomes(roots.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= roots.size()) return;
            DynamicSearch dfs(prep, s, per_job, deadline, use_deadline);
            outcomes[k] = dfs.run_root(roots[k], dive);
        }
    };
    const unsigned workers = std::min<unsigned>(
        cfg.worker_count, static_cast<unsigned>(std::max<std::size_t>(1, roots.size())));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    BestTrack best = dive;
    bool truncated = false;
    for (const auto& oc : outcomes) {
        nodes += oc.nodes;
        truncated = truncated || oc.truncated;
        if (oc.best.size > best.size) best = oc.best;
    }
    return assemble(prep, best, nodes, truncated, cfg);
}

// advances comb to the next s-subset of {0,...,universe-1} in lex order
bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t universe) {
    const std::size_t s = comb.size();
    for (std::size_t i = s; i-- > 0;) {
        if (comb[i] + (s - i) < universe) {
            ++comb[i];
            for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

SearchResult run_enumerate_palettes(const PreparedBox& prep, std::size_t s,
                                    const SearchConfig& cfg) {
    const bool use_deadline = cfg.time_budget_seconds > 0;
    const auto deadline = make_deadline(cfg);
    const std::uint32_t U = prep.table.value_count();

    std::vector<std::uint32_t> comb(s);
    std::iota(comb.begin(), comb.end(), 0u);

    BestTrack best = greedy_dive(prep, s);
    std::uint64_t nodes = prep.n_points;
    bool truncated = false;
    bool exhausted = false;

    std::vector<char> in_palette(U, 0);
    std::vector<std::vector<std::uint64_t>> adj(
        prep.n_points, std::vector<std::uint64_t>((prep.n_points + 63) / 64, 0));
    while (!exhausted) {
        ++nodes;
        if (nodes > cfg.node_budget || (use_deadline && Clock::now() > deadline)) {
            truncated = true;
            break;
        }
        std::fill(in_palette.begin(), in_palette.end(), 0);
        for (std::uint32_t id : comb) in_palette[id] = 1;
        for (auto& row : adj) std::fill(row.begin(), row.end(), 0);
        for (std::uint32_t i = 0; i < prep.n_points; ++i)
            for (std::uint32_t j = i + 1; j < prep.n_points; ++j)
                if (in_palette[prep.table.id(i, j)]) {
                    adj[i][j >> 6] |= std::uint64_t{1} << (j & 63);
                    adj[j][i >> 6] |= std::uint64_t{1} << (i & 63);
                }
        const std::uint64_t remaining = cfg.node_budget > nodes ? cfg.node_budget - nodes : 1;
        CliqueSolver solver(prep.n_points, adj, remaining, deadline, use_deadline);
        SubtreeOutcome oc = solver.solve(best);
        nodes += oc.nodes;
        truncated = truncated || oc.truncated;
        if (oc.best.size > best.size) best = oc.best;
        if (truncated) break;
        exhausted = !next_combination(comb, U);
    }
    return assemble(prep, best, nodes, truncated, cfg);
}

SearchResult search_prepared(const PreparedBox& prep, std::size_t s, const SearchConfig& cfg) {
    validate_config(cfg);
    if (s == 0) throw std::invalid_argument("search_max: s must be >= 1");
    // any subset realizes at most the global palette, so a cap at least that
    // large admits the whole box
    if (s >= prep.table.value_count()) return whole_box_result(prep, cfg);
    if (cfg.palette_mode == SearchConfig::PaletteMode::dynamic)
        return run_dynamic(prep, s, cfg);
    return run_enumerate_palettes(prep, s, cfg);
}

}  // namespace

BoxSearcher::BoxSearcher(const Box& box) : prep_(std::make_shared<detail::PreparedBox>(box)) {}

const Box& BoxSearcher::box() const { return prep_->box; }

SquaredDistancePalette BoxSearcher::global_palette() const {
    return SquaredDistancePalette(prep_->table.values());
}

SearchResult BoxSearcher::search(std::size_t s, const SearchConfig& cfg) const {
    return search_prepared(*prep_, s, cfg);
}

SquaredDistancePalette global_palette(const Box& box) {
    DistanceTable table(box.all_points(detail::kMaxSearchPoints));
    return SquaredDistancePalette(table.values());
}

SearchResult search_max(const Box& box, std::size_t s, const SearchConfig& cfg) {
    return BoxSearcher(box).search(s, cfg);
}

SearchResult max_clique_for_palette(const Box& box, const SquaredDistancePalette& palette,
                                    const SearchConfig& cfg) {
    validate_config(cfg);
    PreparedBox prep(box);
    const auto& values = prep.table.values();
    std::vector<char> in_palette(prep.table.value_count(), 0);
    for (const auto& v : palette.values()) {
        auto it = std::lower_bound(values.begin(), values.end(), v);
        if (it == values.end() || !(*it == v))
            throw std::invalid_argument(
                "max_clique_for_palette: palette value not realized in box");
        in_palette[static_cast<std::uint32_t>(it - values.begin())] = 1;
    }

    std::vector<std::vector<std::uint64_t>> adj(
        prep.n_points, std::vector<std::uint64_t>((prep.n_points + 63) / 64, 0));
    for (std::uint32_t i = 0; i < prep.n_points; ++i)
        for (std::uint32_t j = i + 1; j < prep.n_points; ++j)
            if (in_palette[prep.table.id(i, j)]) {
                adj[i][j >> 6] |= std::uint64_t{1} << (j & 63);
                adj[j][i >> 6] |= std::uint64_t{1} << (i & 63);
            }

    const bool use_deadline = cfg.time_budget_seconds > 0;
    CliqueSolver solver(prep.n_points, adj, cfg.node_budget, make_deadline(cfg), use_deadline);
    BestTrack seed;  // a single point is always a clique
    seed.size = 1;
    seed.members = {0};
    SubtreeOutcome oc = solver.solve(seed);
    return assemble(prep, oc.best, oc.nodes, oc.truncated, cfg);
}

ProbeReport conjecture_probe(unsigned n, unsigned q, std::size_t s, const Box& box,
                             const SearchConfig& cfg) {
    if (box.dimension() != n || box.side_size() != q)
        throw std::invalid_argument("conjecture_probe: box does not match n, q");
    SearchResult sr = search_max(box, s, cfg);
    BigInt count = count_monomials(n, q, s);
    BigInt bound = 2 * count;
    const BigInt sz(static_cast<unsigned long>(sr.best_size));
    const bool conj_ok = sz <= count;
    const bool thm_ok = sz <= bound;
    return ProbeReport{n, q, s, std::move(sr), std::move(count), std::move(bound), conj_ok, thm_ok};
}

}  // namespace boxdist
