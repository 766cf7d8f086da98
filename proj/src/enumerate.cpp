#include "nplatonic/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace nplatonic {

int default_parallelism() {
    if (const char* env = std::getenv("NPLATONIC_THREADS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

namespace {

constexpr int kMaxDegree = 5;

// Target counts for a k-regular plane graph of order n.
struct Targets {
    int edges = 0;
    int faces = 0;
    int excess = 0;  // sum over faces of (size - 3)
    std::optional<FaceFilter> filter;
    int exceptional_cap = 0;  // upper bound on the total size of exceptional faces

    Targets(int k, int n, std::optional<FaceFilter> f) : filter(f) {
        edges = k * n / 2;
        faces = 2 - n + edges;
        excess = 2 * edges - 3 * faces;
        if (filter) exceptional_cap = 2 * edges - filter->d * (faces - filter->max_exceptional);
    }
};

// Face-walk bookkeeping on a partial rotation system: only darts leaving
// processed vertices are known, and a face successor is known only when the
// dart's head is processed as well. Closed orbits are finished faces; an open
// chain of L darts lies on a face of size at least L + 1.
struct ChainTally {
    int closed = 0;
    int excess = 0;
    int closed_exceptional = 0;
    int exceptional_size = 0;

    bool admissible(const Targets& t, bool complete) const {
        if (excess > t.excess) return false;
        if (t.filter) {
            if (closed_exceptional > t.filter->max_exceptional) return false;
            if (exceptional_size > t.exceptional_cap) return false;
        }
        if (complete && closed != t.faces) return false;
        return true;
    }

    void add_closed(int size, const Targets& t) {
        ++closed;
        excess += std::max(0, size - 3);
        if (t.filter && size != t.filter->d) {
            ++closed_exceptional;
            exceptional_size += size;
        }
    }

    void add_open(int length, const Targets& t) {
        excess += std::max(0, length + 1 - 3);
        if (t.filter && length + 1 > t.filter->d) exceptional_size += length + 1;
    }
};

// ---------------------------------------------------------------------------
// Canonical augmentation over rotation systems.
//
// The search writes the rooted traversal code of the map directly: vertices
// are processed in label order, and each vertex lists its neighbours starting
// from the dart back to the vertex that discovered it. Each code string fixes
// a rooted map, so emitting only strings that are minimal over every root and
// both orientations yields one map per isomorphism class. Prefixes are pruned
// as soon as another root already produces a smaller prefix.
class MapSearch {
public:
    using Emit = std::function<void(std::vector<std::uint16_t>, Rotations)>;

    MapSearch(int k, int n, std::optional<FaceFilter> filter, int workers, int worker_id, Emit emit)
        : k_(k), n_(n), targets_(k, n, filter), workers_(workers), worker_id_(worker_id), emit_(std::move(emit)),
          rot_(n), refs_(n), stamp_(n, 0), label_(n, 0), order_(n), parent_(n) {}

    void run() {
        if (n_ < k_ + 1 || (k_ * n_) % 2 != 0) return;
        for (int j = 0; j < k_; ++j) {
            rot_[0][j] = j + 1;
            refs_[j + 1].push_back(0);
            code_.push_back(static_cast<std::uint16_t>(j + 2));
        }
        code_.push_back(0);
        labeled_ = k_ + 1;
        if (vertex_done(0)) process(1);
    }

private:
    void process(int v) {
        if (v == labeled_) {
            if (labeled_ == n_) leaf();
            return;
        }
        rot_[v][0] = refs_[v][0];
        code_.push_back(static_cast<std::uint16_t>(refs_[v][0] + 1));
        fill(v, 1, 1u);
        code_.pop_back();
    }

    // placed: bitmask over refs_[v] of back-references already in v's list.
    void fill(int v, int pos, unsigned placed) {
        const int nrefs = static_cast<int>(refs_[v].size());
        const int unplaced = nrefs - std::popcount(placed);
        const int slots = k_ - pos;
        if (unplaced > slots) return;
        if (pos == k_) {
            code_.push_back(0);
            if (vertex_done(v)) process(v + 1);
            code_.pop_back();
            return;
        }
        for (int r = 0; r < nrefs; ++r) {
            if (placed & (1u << r)) continue;
            place(v, pos, refs_[v][r]);
            fill(v, pos + 1, placed | (1u << r));
            code_.pop_back();
        }
        if (unplaced == slots) return;
        for (int w = v + 1; w < labeled_; ++w) {
            if (static_cast<int>(refs_[w].size()) >= k_ || listed(v, pos, w)) continue;
            place(v, pos, w);
            refs_[w].push_back(v);
            fill(v, pos + 1, placed);
            refs_[w].pop_back();
            code_.pop_back();
        }
        if (labeled_ < n_) {
            const int w = labeled_++;
            place(v, pos, w);
            refs_[w].push_back(v);
            fill(v, pos + 1, placed);
            refs_[w].pop_back();
            code_.pop_back();
            --labeled_;
        }
    }

    bool listed(int v, int pos, int w) const {
        for (int j = 0; j < pos; ++j) {
            if (rot_[v][j] == w) return true;
        }
        return false;
    }

    void place(int v, int pos, int w) {
        rot_[v][pos] = w;
        code_.push_back(static_cast<std::uint16_t>(w + 1));
    }

    // Called after vertex v's rotation is complete.
    bool vertex_done(int v) {
        const int processed = v + 1;
        if (!faces_ok(processed)) return false;
        if (!orderly_ok(processed)) return false;
        if (v == kSplitVertex && workers_ > 1) {
            return static_cast<int>(subtree_counter_++ % workers_) == worker_id_;
        }
        return true;
    }

    int index_of(int u, int v) const {
        for (int j = 0; j < k_; ++j) {
            if (rot_[u][j] == v) return j;
        }
        return -1;
    }

    bool faces_ok(int processed) {
        const int darts = processed * k_;
        seen_.assign(darts, 0);
        ChainTally tally;
        auto succ = [&](int d) -> int {
            const int v = d / k_;
            const int u = rot_[v][d % k_];
            if (u >= processed) return -1;
            return u * k_ + (index_of(u, v) + 1) % k_;
        };
        auto pred = [&](int d) -> int {
            const int u = d / k_;
            const int v = rot_[u][(d % k_ + k_ - 1) % k_];
            if (v >= processed) return -1;
            return v * k_ + index_of(v, u);
        };
        for (int d = 0; d < darts; ++d) {
            if (seen_[d]) continue;
            int start = d;
            bool cycle = false;
            for (int p = pred(start); p >= 0; p = pred(start)) {
                start = p;
                if (start == d) {
                    cycle = true;
                    break;
                }
            }
            int length = 0;
            int e = start;
            do {
                seen_[e] = 1;
                ++length;
                e = succ(e);
            } while (e >= 0 && e != start);
            if (cycle) {
                tally.add_closed(length, targets_);
            } else {
                tally.add_open(length, targets_);
            }
        }
        return tally.admissible(targets_, processed == n_);
    }

    // False if some other root/orientation already yields a smaller prefix.
    bool orderly_ok(int processed) {
        for (int w = 0; w < processed; ++w) {
            for (int j = 0; j < k_; ++j) {
                for (int m = 0; m < 2; ++m) {
                    if (w == 0 && j == 0 && m == 0) continue;
                    if (alt_smaller(processed, w, j, m == 1)) return false;
                }
            }
        }
        return true;
    }

    bool alt_smaller(int processed, int root, int first_pos, bool mirrored) {
        ++current_stamp_;
        auto labelled = [&](int u) { return stamp_[u] == current_stamp_; };
        stamp_[root] = current_stamp_;
        label_[root] = 1;
        order_[0] = root;
        int count = 1;
        std::size_t idx = 0;
        for (int vi = 0; vi < count; ++vi) {
            const int w = order_[vi];
            if (w >= processed) return false;
            const int start = vi == 0 ? first_pos : index_of(w, parent_[vi]);
            for (int t = 0; t < k_; ++t) {
                const int pos = mirrored ? (start - t + k_) % k_ : (start + t) % k_;
                const int u = rot_[w][pos];
                if (!labelled(u)) {
                    stamp_[u] = current_stamp_;
                    label_[u] = ++count;
                    order_[count - 1] = u;
                    parent_[count - 1] = w;
                }
                const int sym = label_[u];
                if (sym < code_[idx]) return true;
                if (sym > code_[idx]) return false;
                ++idx;
            }
            ++idx;  // terminators align since every vertex has degree k
        }
        return false;
    }

    void leaf() {
        Rotations r(n_);
        for (int v = 0; v < n_; ++v) r[v].assign(rot_[v].begin(), rot_[v].begin() + k_);
        emit_(code_, std::move(r));
    }

    static constexpr int kSplitVertex = 2;

    int k_, n_;
    Targets targets_;
    int workers_, worker_id_;
    Emit emit_;
    std::vector<std::array<int, kMaxDegree>> rot_;
    std::vector<std::vector<int>> refs_;
    std::vector<std::uint16_t> code_;
    int labeled_ = 0;
    std::vector<char> seen_;
    std::vector<unsigned> stamp_;
    unsigned current_stamp_ = 0;
    std::vector<int> label_, order_, parent_;
    unsigned long long subtree_counter_ = 0;
};

// ---------------------------------------------------------------------------
// Brute-force oracle: labeled graphs first, rotations second.

class LabeledSearch {
public:
    LabeledSearch(int k, int n, std::set<CanonicalCode>& out)
        : k_(k), n_(n), targets_(k, n, std::nullopt), out_(out), adj_(n), rot_(n) {}

    void run() {
        if (n_ < k_ + 1 || (k_ * n_) % 2 != 0) return;
        labeled_ = 1;
        choose_forward(0);
    }

private:
    // Vertex v picks its remaining neighbours among higher labels. Labels are
    // BFS-consistent: v's previously unseen neighbours take the next labels.
    void choose_forward(int v) {
        if (v == n_) {
            finish();
            return;
        }
        if (v >= labeled_) return;  // disconnected
        const int need = k_ - static_cast<int>(adj_[v].size());
        if (need < 0) return;
        std::vector<int> candidates;
        for (int w = v + 1; w < labeled_; ++w) {
            if (static_cast<int>(adj_[w].size()) < k_ && !std::count(adj_[v].begin(), adj_[v].end(), w)) {
                candidates.push_back(w);
            }
        }
        const int max_new = std::min(need, n_ - labeled_);
        for (int fresh = 0; fresh <= max_new; ++fresh) {
            const int from_old = need - fresh;
            if (from_old > static_cast<int>(candidates.size())) continue;
            std::vector<char> pick(candidates.size(), 0);
            std::fill(pick.begin(), pick.begin() + from_old, 1);
            std::sort(pick.begin(), pick.end());
            do {
                std::vector<int> added;
                for (std::size_t i = 0; i < candidates.size(); ++i) {
                    if (pick[i]) added.push_back(candidates[i]);
                }
                for (int i = 0; i < fresh; ++i) added.push_back(labeled_ + i);
                for (int w : added) {
                    adj_[v].push_back(w);
                    adj_[w].push_back(v);
                }
                const int first_fresh = labeled_;
                labeled_ += fresh;
                choose_rotation(v, first_fresh);
                labeled_ -= fresh;
                for (int w : added) {
                    adj_[v].pop_back();
                    adj_[w].pop_back();
                }
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
    }

    // Fresh neighbours are interchangeable up to relabeling, so only
    // rotations listing them in increasing order are tried.
    void choose_rotation(int v, int first_fresh) {
        std::vector<int> rest(adj_[v].begin(), adj_[v].end());
        std::sort(rest.begin(), rest.end());
        const int first = rest.front();
        rest.erase(rest.begin());
        do {
            rot_[v].clear();
            rot_[v].push_back(first);
            rot_[v].insert(rot_[v].end(), rest.begin(), rest.end());
            if (fresh_sorted(rot_[v], first_fresh) && planar_so_far(v + 1)) choose_forward(v + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
        rot_[v].clear();
    }

    static bool fresh_sorted(const std::vector<int>& r, int first_fresh) {
        int last = -1;
        for (int u : r) {
            if (u < first_fresh) continue;
            if (u < last) return false;
            last = u;
        }
        return true;
    }

    int position(int u, int v) const {
        const auto& r = rot_[u];
        return static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
    }

    bool planar_so_far(int processed) {
        // Darts are (vertex, slot); known successor of u->w is w->next(u).
        std::vector<std::vector<char>> seen(processed, std::vector<char>(k_, 0));
        ChainTally tally;
        for (int v = 0; v < processed; ++v) {
            for (int s = 0; s < k_; ++s) {
                if (seen[v][s]) continue;
                int sv = v, ss = s;
                bool cycle = false;
                while (true) {
                    const int back = rot_[sv][(ss + k_ - 1) % k_];
                    if (back >= processed) break;
                    const int bs = position(back, sv);
                    sv = back;
                    ss = bs;
                    if (sv == v && ss == s) {
                        cycle = true;
                        break;
                    }
                }
                int length = 0;
                int cv = sv, cs = ss;
                while (true) {
                    seen[cv][cs] = 1;
                    ++length;
                    const int head = rot_[cv][cs];
                    if (head >= processed) break;
                    const int ns = (position(head, cv) + 1) % k_;
                    cv = head;
                    cs = ns;
                    if (cv == sv && cs == ss) break;
                }
                if (cycle) {
                    tally.add_closed(length, targets_);
                } else {
                    tally.add_open(length, targets_);
                }
            }
        }
        return tally.admissible(targets_, processed == n_);
    }

    void finish() {
        if (labeled_ != n_) return;
        out_.insert(canonical_code(PlaneGraph::build(rot_)));
    }

    int k_, n_;
    Targets targets_;
    std::set<CanonicalCode>& out_;
    std::vector<std::vector<int>> adj_;
    Rotations rot_;
    int labeled_ = 0;
};

}  // namespace

std::vector<PlaneGraph> enumerate_order(int k, int n, int parallelism, std::optional<FaceFilter> filter) {
    if (k < 3 || k > kMaxDegree) throw Error(Errc::InvalidArgument, "k must lie in [3,5]");
    const int workers = std::max(1, parallelism);
    using Item = std::pair<std::vector<std::uint16_t>, Rotations>;
    std::vector<std::vector<Item>> found(workers);
    auto work = [&](int id) {
        MapSearch search(k, n, filter, workers, id,
                         [&found, id](std::vector<std::uint16_t> code, Rotations r) {
                             found[id].emplace_back(std::move(code), std::move(r));
                         });
        search.run();
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int id = 0; id < workers; ++id) threads.emplace_back(work, id);
        for (auto& t : threads) t.join();
    }
    std::vector<Item> all;
    for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), [](const Item& a, const Item& b) { return a.first < b.first; });
    std::vector<PlaneGraph> out;
    out.reserve(all.size());
    for (auto& [code, r] : all) out.push_back(PlaneGraph::build(r));
    return out;
}

void enumerate_k_regular(const EnumSpec& spec, const GraphSink& sink) {
    if (spec.k < 3 || spec.k > kMaxDegree) throw Error(Errc::InvalidArgument, "k must lie in [3,5]");
    if (spec.max_vertices < spec.k + 1) throw Error(Errc::InvalidArgument, "max_vertices must be at least k+1");
    for (int n = spec.k + 1; n <= spec.max_vertices; ++n) {
        if ((spec.k * n) % 2 != 0) continue;
        if (spec.strategy == Strategy::CanonicalAugmentation) {
            for (const auto& g : enumerate_order(spec.k, n, spec.parallelism)) sink(g);
        } else {
            // The oracle keeps codes only. A code lists each vertex's
            // neighbour labels in rotation order, terminated by 0.
            for (const auto& c : bruteforce_oracle(spec.k, n)) {
                Rotations r;
                std::vector<Vertex> current;
                for (std::uint16_t s : c.symbols) {
                    if (s == 0) {
                        r.push_back(current);
                        current.clear();
                    } else {
                        current.push_back(s - 1);
                    }
                }
                sink(PlaneGraph::build(r));
            }
        }
    }
}

bool oracle_supports(int k, int n) {
    switch (k) {
        case 3: return n <= 10;
        case 4: return n <= 9;
        case 5: return n <= 12;
        default: return false;
    }
}

std::set<CanonicalCode> bruteforce_oracle(int k, int n) {
    if (!oracle_supports(k, n)) {
        throw Error(Errc::TooLarge, "oracle limited to k=3 n<=10, k=4 n<=9, k=5 n<=12");
    }
    std::set<CanonicalCode> out;
    LabeledSearch search(k, n, out);
    search.run();
    return out;
}

std::vector<NPGraph> filter_nearly_platonic(const std::vector<PlaneGraph>& graphs, std::optional<int> t) {
    std::vector<NPGraph> out;
    for (const auto& g : graphs) {
        auto rep = np_report(g);
        if (!rep) continue;
        if (t && rep->t != *t) continue;
        out.push_back({g, *rep});
    }
    return out;
}

}  // namespace nplatonic
