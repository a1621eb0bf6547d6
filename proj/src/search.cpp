#include "projtri/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "projtri/isomorphism.hpp"

namespace projtri {

namespace {

constexpr long long kMaxCandidateFacets = 2'000'000;

std::uint64_t next_comb(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    // ~t & (t + 1) is the lowest set bit of ~t
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

std::vector<std::uint64_t> k_subsets(int n, int k) {
    long long count = binomial(n, k);
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(count));
    std::uint64_t m = (1ull << k) - 1;
    for (long long i = 0; i < count; ++i) {
        out.push_back(m);
        if (i + 1 < count) m = next_comb(m);
    }
    return out;
}

struct OrbitData {
    std::vector<int> facets;                     // member facet ids, ascending
    std::vector<std::pair<int, int>> ridge_cnt;  // (ridge id, multiplicity)
    std::vector<std::pair<int, int>> vert_cnt;   // (vertex, multiplicity)
    bool self_conflict = false;
};

// Immutable per-problem tables shared by all workers.
struct Instance {
    int d, n;
    long long min_facets;
    std::uint64_t full;
    std::vector<std::uint64_t> facet_masks;  // ascending
    std::vector<std::uint64_t> ridge_masks;  // ascending
    std::vector<int> facet_ridges;           // (d+1) ridge ids per facet, flattened
    std::vector<std::vector<int>> ridge_cofacets;
    std::vector<int> facet_orbit;
    std::vector<OrbitData> orbits;
    std::vector<std::vector<std::uint64_t>> conflicts;  // orbit-level bitsets
    std::vector<int> seed_orbits;
    std::uint64_t fingerprint;

    int ridge_id(std::uint64_t mask) const {
        return static_cast<int>(
            std::lower_bound(ridge_masks.begin(), ridge_masks.end(), mask) - ridge_masks.begin());
    }
    int facet_id(std::uint64_t mask) const {
        return static_cast<int>(
            std::lower_bound(facet_masks.begin(), facet_masks.end(), mask) - facet_masks.begin());
    }
};

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
        h ^= (x >> (8 * b)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

Instance build_instance(const SearchProblem& p) {
    if (p.group.degree() != p.n) throw NotAnAction("group degree does not match vertex count");
    if (p.d < 1 || p.d + 1 > p.n) throw Error("search needs 1 <= d and d+1 <= n");
    if (p.n > 27) throw TooManyVertices("search is capped at 27 vertices");
    if (p.min_facets < 1) throw Error("min_facets must be at least 1");
    if (binomial(p.n, p.d + 1) > kMaxCandidateFacets)
        throw FaceCountOverflow("too many candidate facets for this search");

    Instance in;
    in.d = p.d;
    in.n = p.n;
    in.min_facets = p.min_facets;
    in.full = (1ull << p.n) - 1;
    in.facet_masks = k_subsets(p.n, p.d + 1);
    in.ridge_masks = k_subsets(p.n, p.d);

    int nf = static_cast<int>(in.facet_masks.size());
    int nr = static_cast<int>(in.ridge_masks.size());

    in.facet_ridges.resize(static_cast<std::size_t>(nf) * (p.d + 1));
    in.ridge_cofacets.resize(nr);
    for (int f = 0; f < nf; ++f) {
        std::uint64_t m = in.facet_masks[f];
        int slot = 0;
        for (std::uint64_t b = m; b; b &= b - 1) {
            std::uint64_t r = m & ~(b & (~b + 1));
            int rid = in.ridge_id(r);
            in.facet_ridges[static_cast<std::size_t>(f) * (p.d + 1) + slot++] = rid;
            in.ridge_cofacets[rid].push_back(f);
        }
    }

    // orbits under the group, numbered by smallest member facet
    in.facet_orbit.assign(nf, -1);
    for (int f = 0; f < nf; ++f) {
        if (in.facet_orbit[f] >= 0) continue;
        int oid = static_cast<int>(in.orbits.size());
        OrbitData od;
        std::vector<int> queue = {f};
        in.facet_orbit[f] = oid;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            od.facets.push_back(queue[head]);
            VertexSet cur = VertexSet::from_bits(in.facet_masks[queue[head]]);
            for (const auto& g : p.group.generators()) {
                int img = in.facet_id(g(cur).bits());
                if (in.facet_orbit[img] < 0) {
                    in.facet_orbit[img] = oid;
                    queue.push_back(img);
                }
            }
        }
        std::sort(od.facets.begin(), od.facets.end());

        std::vector<std::pair<int, int>> rc, vc;
        for (int fid : od.facets) {
            for (int s = 0; s <= p.d; ++s)
                rc.push_back({in.facet_ridges[static_cast<std::size_t>(fid) * (p.d + 1) + s], 1});
            VertexSet::from_bits(in.facet_masks[fid]).for_each([&](int v) { vc.push_back({v, 1}); });
        }
        auto fold = [](std::vector<std::pair<int, int>>& xs) {
            std::sort(xs.begin(), xs.end());
            std::size_t w = 0;
            for (auto [k, c] : xs) {
                if (w && xs[w - 1].first == k)
                    xs[w - 1].second += c;
                else
                    xs[w++] = {k, c};
            }
            xs.resize(w);
        };
        fold(rc);
        fold(vc);
        for (auto [rid, cnt] : rc)
            if (cnt > 2) od.self_conflict = true;
        od.ridge_cnt = std::move(rc);
        od.vert_cnt = std::move(vc);
        in.orbits.push_back(std::move(od));
    }

    // orbit pairs whose facets can cover the whole vertex set together; any
    // such pair in the complex puts some subset and its complement both in
    int no = static_cast<int>(in.orbits.size());
    int words = (no + 63) / 64;
    in.conflicts.assign(no, std::vector<std::uint64_t>(words, 0));
    for (int f = 0; f < nf; ++f)
        for (int g = f; g < nf; ++g)
            if ((in.facet_masks[f] | in.facet_masks[g]) == in.full) {
                int a = in.facet_orbit[f], b = in.facet_orbit[g];
                in.conflicts[a][b >> 6] |= 1ull << (b & 63);
                in.conflicts[b][a >> 6] |= 1ull << (a & 63);
                if (a == b) in.orbits[a].self_conflict = true;
            }

    for (VertexSet s : p.seed_facets) {
        if (s.size() != p.d + 1 || !s.subset_of(VertexSet::from_bits(in.full)))
            throw InfeasibleSeed("seed facet is not a (d+1)-subset of the vertex set");
        in.seed_orbits.push_back(in.facet_orbit[in.facet_id(s.bits())]);
    }
    std::sort(in.seed_orbits.begin(), in.seed_orbits.end());
    in.seed_orbits.erase(std::unique(in.seed_orbits.begin(), in.seed_orbits.end()),
                         in.seed_orbits.end());

    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv_mix(h, static_cast<std::uint64_t>(p.d));
    h = fnv_mix(h, static_cast<std::uint64_t>(p.n));
    h = fnv_mix(h, static_cast<std::uint64_t>(p.min_facets));
    for (const auto& g : p.group.elements())
        for (int x : g.images()) h = fnv_mix(h, static_cast<std::uint64_t>(x));
    std::vector<std::uint64_t> seeds;
    for (VertexSet s : p.seed_facets) seeds.push_back(s.bits());
    std::sort(seeds.begin(), seeds.end());
    for (std::uint64_t s : seeds) h = fnv_mix(h, s);
    in.fingerprint = h;
    return in;
}

enum : std::int8_t { kUndecided = 0, kIn = 1, kOut = 2 };

struct Budget {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t max_nodes = 0;  // 0: unlimited
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<bool> stop{false};

    // counts one decision; false once the budget is exhausted. A failed tick
    // is not counted, so nodes always equals the decisions actually applied
    // and a resumed search ends on the same total as an uninterrupted one.
    bool tick() {
        std::uint64_t k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (max_nodes && k > max_nodes) stop.store(true, std::memory_order_relaxed);
        if (has_deadline && (k & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            stop.store(true, std::memory_order_relaxed);
        if (stop.load(std::memory_order_relaxed)) {
            nodes.fetch_sub(1, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

struct Frame {
    int orbit;
    int next_branch;  // 2: OUT still pending, 3: both branches taken
    std::size_t trail_mark;
};

struct Engine {
    const Instance& in;
    std::vector<std::int8_t> ostate;
    std::vector<std::int16_t> ridge_deg;   // cofacets in IN orbits
    std::vector<std::int32_t> ridge_rem;   // cofacets in UNDECIDED orbits
    std::vector<std::int32_t> vert_avail;  // facets through v in non-OUT orbits; slot 0 unused
    long long in_count = 0, undecided_count = 0;
    std::vector<int> trail;  // orbit ids in decision order
    std::vector<int> deg1;   // ridges that recently hit degree 1 (lazily compacted)
    std::vector<Frame> frames;
    bool descending = true;
    std::vector<std::vector<std::uint64_t>> solutions;
    Budget* budget = nullptr;

    explicit Engine(const Instance& inst) : in(inst) {
        int nf = static_cast<int>(in.facet_masks.size());
        int nr = static_cast<int>(in.ridge_masks.size());
        ostate.assign(in.orbits.size(), kUndecided);
        ridge_deg.assign(nr, 0);
        ridge_rem.assign(nr, 0);
        for (int r = 0; r < nr; ++r)
            ridge_rem[r] = static_cast<std::int32_t>(in.ridge_cofacets[r].size());
        vert_avail.assign(in.n + 1, 0);
        for (int f = 0; f < nf; ++f)
            VertexSet::from_bits(in.facet_masks[f]).for_each([&](int v) { ++vert_avail[v]; });
        undecided_count = nf;
    }

    // applies one orbit decision; follow-up forcings go on the queue; returns
    // false on contradiction but always applies every counter update so the
    // trail-based undo stays uniform
    bool set_state(int oid, std::int8_t val, std::vector<std::pair<int, std::int8_t>>& forced) {
        const OrbitData& od = in.orbits[oid];
        trail.push_back(oid);
        ostate[oid] = val;
        long long sz = static_cast<long long>(od.facets.size());
        undecided_count -= sz;
        bool ok = true;

        if (val == kIn) {
            in_count += sz;
            for (auto [rid, cnt] : od.ridge_cnt) {
                ridge_deg[rid] = static_cast<std::int16_t>(ridge_deg[rid] + cnt);
                ridge_rem[rid] -= cnt;
                int deg = ridge_deg[rid];
                if (deg > 2) {
                    ok = false;
                } else if (deg == 2) {
                    for (int f : in.ridge_cofacets[rid])
                        if (ostate[in.facet_orbit[f]] == kUndecided)
                            forced.push_back({in.facet_orbit[f], kOut});
                } else {
                    deg1.push_back(rid);
                    if (ridge_rem[rid] == 0)
                        ok = false;
                    else if (ridge_rem[rid] == 1)
                        force_unique_cofacet(rid, forced);
                }
            }
            const auto& row = in.conflicts[oid];
            for (int w = 0; w < static_cast<int>(row.size()); ++w)
                for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
                    int other = w * 64 + std::countr_zero(bits);
                    if (ostate[other] == kIn)
                        ok = false;
                    else if (ostate[other] == kUndecided)
                        forced.push_back({other, kOut});
                }
        } else {
            for (auto [rid, cnt] : od.ridge_cnt) {
                ridge_rem[rid] -= cnt;
                if (ridge_deg[rid] == 1) {
                    if (ridge_rem[rid] == 0)
                        ok = false;
                    else if (ridge_rem[rid] == 1)
                        force_unique_cofacet(rid, forced);
                }
            }
            for (auto [v, cnt] : od.vert_cnt) {
                vert_avail[v] -= cnt;
                if (vert_avail[v] == 0) ok = false;
            }
        }
        if (in_count + undecided_count < in.min_facets) ok = false;
        return ok;
    }

    void force_unique_cofacet(int rid, std::vector<std::pair<int, std::int8_t>>& forced) {
        for (int f : in.ridge_cofacets[rid])
            if (ostate[in.facet_orbit[f]] == kUndecided) {
                forced.push_back({in.facet_orbit[f], kIn});
                return;
            }
    }

    // one decision plus saturation of all forcings it triggers
    bool decide(int oid, std::int8_t val) {
        if (ostate[oid] != kUndecided) return ostate[oid] == val;
        std::vector<std::pair<int, std::int8_t>> forced;
        bool ok = set_state(oid, val, forced);
        while (!forced.empty()) {
            auto [o2, v2] = forced.back();
            forced.pop_back();
            if (ostate[o2] != kUndecided) {
                if (ostate[o2] != v2) ok = false;
                continue;
            }
            if (!ok) continue;  // contradiction already found, stop expanding
            ok = set_state(o2, v2, forced);
        }
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            int oid = trail.back();
            trail.pop_back();
            const OrbitData& od = in.orbits[oid];
            long long sz = static_cast<long long>(od.facets.size());
            std::int8_t was = ostate[oid];
            ostate[oid] = kUndecided;
            undecided_count += sz;
            if (was == kIn) {
                in_count -= sz;
                for (auto [rid, cnt] : od.ridge_cnt) {
                    ridge_deg[rid] = static_cast<std::int16_t>(ridge_deg[rid] - cnt);
                    ridge_rem[rid] += cnt;
                    if (ridge_deg[rid] == 1) deg1.push_back(rid);
                }
            } else {
                for (auto [rid, cnt] : od.ridge_cnt) ridge_rem[rid] += cnt;
                for (auto [v, cnt] : od.vert_cnt) vert_avail[v] += cnt;
            }
        }
    }

    // deterministic, state-only: take the degree-1 ridge with the fewest
    // remaining candidate cofacets (ties to the smaller ridge id) and branch
    // on the smallest undecided orbit through it; with no degree-1 ridge,
    // take the smallest undecided orbit
    int select_branch() {
        int best_rid = -1, best_rem = 1 << 30;
        std::size_t w = 0;
        for (std::size_t i = 0; i < deg1.size(); ++i) {
            int rid = deg1[i];
            if (ridge_deg[rid] != 1) continue;  // stale
            deg1[w++] = rid;
            int rem = ridge_rem[rid];
            if (rem < best_rem || (rem == best_rem && rid < best_rid)) {
                best_rem = rem;
                best_rid = rid;
            }
        }
        deg1.resize(w);
        if (best_rid >= 0) {
            int pick = -1;
            for (int f : in.ridge_cofacets[best_rid]) {
                int o = in.facet_orbit[f];
                if (ostate[o] == kUndecided && (pick < 0 || o < pick)) pick = o;
            }
            if (pick >= 0) return pick;
        }
        for (int o = 0; o < static_cast<int>(in.orbits.size()); ++o)
            if (ostate[o] == kUndecided) return o;
        return -1;
    }

    void emit_leaf() {
        std::vector<std::uint64_t> masks;
        for (std::size_t o = 0; o < in.orbits.size(); ++o)
            if (ostate[o] == kIn)
                for (int f : in.orbits[o].facets) masks.push_back(in.facet_masks[f]);
        std::sort(masks.begin(), masks.end());
        solutions.push_back(std::move(masks));
    }

    // DFS to completion below the current state; false when the budget
    // interrupted it. Interruptions happen only at points where every stacked
    // frame has its recorded branch applied, so a later call resumes cleanly
    // and a checkpoint written here replays exactly.
    bool run() {
        while (true) {
            if (descending) {
                int oid = select_branch();
                if (oid < 0) {
                    emit_leaf();
                    descending = false;
                    continue;
                }
                if (!budget->tick()) return false;
                frames.push_back({oid, 2, trail.size()});
                descending = decide(oid, kIn);
            } else {
                if (frames.empty()) return true;
                Frame& f = frames.back();
                if (f.next_branch == 2) {
                    if (!budget->tick()) return false;
                    undo_to(f.trail_mark);
                    f.next_branch = 3;
                    descending = decide(f.orbit, kOut);
                } else {
                    undo_to(f.trail_mark);
                    frames.pop_back();
                }
            }
        }
    }
};

void verify_solution(const SearchProblem& p, const std::vector<std::uint64_t>& masks) {
    std::vector<VertexSet> facets;
    facets.reserve(masks.size());
    for (std::uint64_t m : masks) facets.push_back(VertexSet::from_bits(m));
    SimplicialComplex k = SimplicialComplex::from_facet_sets(p.n, facets);
    if (k.facet_count() != static_cast<long long>(masks.size()))
        throw Error("search soundness: emitted facets were not all maximal");
    if (k.facet_count() < p.min_facets)
        throw Error("search soundness: facet count below the requested bound");
    if (!k.pseudomanifold_status(p.d).weak)
        throw Error("search soundness: emitted complex is not a weak pseudomanifold");
    if (k.complementarity_status() == Complementarity::Neither)
        throw Error("search soundness: emitted complex has a complementary face pair");
    for (const auto& g : p.group.generators()) {
        std::vector<VertexSet> image;
        image.reserve(facets.size());
        for (VertexSet f : facets) image.push_back(g(f));
        std::sort(image.begin(), image.end());
        if (image != k.facets())
            throw Error("search soundness: emitted complex is not group invariant");
    }
}

struct CheckpointData {
    std::uint64_t fingerprint = 0;
    std::uint64_t nodes = 0;
    bool backtracking = false;
    std::vector<std::pair<int, int>> path;  // (orbit, applied branch: 1 in, 2 out)
    std::vector<std::vector<std::uint64_t>> solutions;
};

void write_checkpoint(const std::string& file, const Instance& in, const Engine& eng,
                      std::uint64_t nodes) {
    std::string tmp = file + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw Error("cannot write checkpoint file " + file);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(in.fingerprint));
        os << "search-checkpoint v1\n";
        os << "fingerprint " << buf << "\n";
        os << "nodes " << nodes << "\n";
        os << "phase " << (eng.descending ? "descending" : "backtracking") << "\n";
        for (const Frame& f : eng.frames)
            os << "frame " << f.orbit << " " << (f.next_branch - 1) << "\n";
        for (const auto& sol : eng.solutions) {
            os << "solution" << std::hex;
            for (std::uint64_t m : sol) os << " " << m;
            os << std::dec << "\n";
        }
        os << "end\n";
        if (!os) throw Error("failed while writing checkpoint file " + file);
    }
    std::rename(tmp.c_str(), file.c_str());
}

CheckpointData read_checkpoint(const std::string& file) {
    std::ifstream is(file);
    if (!is) throw Error("cannot read checkpoint file " + file);
    CheckpointData cp;
    std::string line;
    if (!std::getline(is, line) || line != "search-checkpoint v1")
        throw FormatError("unrecognized checkpoint header");
    bool saw_end = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "fingerprint") {
            ls >> std::hex >> cp.fingerprint >> std::dec;
        } else if (key == "nodes") {
            ls >> cp.nodes;
        } else if (key == "phase") {
            std::string ph;
            ls >> ph;
            if (ph != "descending" && ph != "backtracking")
                throw FormatError("bad phase line in checkpoint");
            cp.backtracking = (ph == "backtracking");
        } else if (key == "frame") {
            int o = -1, b = -1;
            if (!(ls >> o >> b) || (b != 1 && b != 2))
                throw FormatError("bad frame line in checkpoint");
            cp.path.push_back({o, b});
        } else if (key == "solution") {
            std::vector<std::uint64_t> sol;
            std::uint64_t m;
            ls >> std::hex;
            while (ls >> m) sol.push_back(m);
            cp.solutions.push_back(std::move(sol));
        } else if (key == "end") {
            saw_end = true;
        } else {
            throw FormatError("unknown key '" + key + "' in checkpoint");
        }
    }
    if (!saw_end) throw FormatError("truncated checkpoint file");
    return cp;
}

// pre-search forcings: self-conflicting orbits out, then seeds in.
// 0 = fine, 1 = no solutions exist, 2 = the seeds are contradictory
int initial_propagate(Engine& eng) {
    const Instance& in = eng.in;
    for (std::size_t o = 0; o < in.orbits.size(); ++o)
        if (in.orbits[o].self_conflict && eng.ostate[o] == kUndecided)
            if (!eng.decide(static_cast<int>(o), kOut)) return 1;
    for (int o : in.seed_orbits)
        if (!eng.decide(o, kIn)) return 2;
    if (eng.in_count + eng.undecided_count < in.min_facets) return 1;
    return 0;
}

void replay_checkpoint(Engine& eng, const CheckpointData& cp) {
    eng.solutions = cp.solutions;
    for (std::size_t i = 0; i < cp.path.size(); ++i) {
        auto [orbit, applied] = cp.path[i];
        if (eng.select_branch() != orbit)
            throw FormatError("checkpoint path diverges from the search order");
        eng.frames.push_back({orbit, applied + 1, eng.trail.size()});
        bool ok = eng.decide(orbit, applied == 1 ? kIn : kOut);
        bool last = (i + 1 == cp.path.size());
        // only the deepest frame may sit on a contradictory branch, and only
        // when the checkpoint caught the engine about to backtrack off it
        if (!ok && !(last && cp.backtracking))
            throw FormatError("checkpoint path is contradictory");
    }
    eng.descending = cp.path.empty() ? true : !cp.backtracking;
}

}  // namespace

std::vector<std::vector<VertexSet>> facet_orbits(const SearchProblem& p) {
    Instance in = build_instance(p);
    std::vector<std::vector<VertexSet>> out;
    out.reserve(in.orbits.size());
    for (const auto& od : in.orbits) {
        std::vector<VertexSet> orb;
        orb.reserve(od.facets.size());
        for (int f : od.facets) orb.push_back(VertexSet::from_bits(in.facet_masks[f]));
        out.push_back(std::move(orb));
    }
    return out;
}

SearchResult enumerate(const SearchProblem& p) {
    Instance in = build_instance(p);
    const SearchLimits& lim = p.limits;
    if (lim.threads > 1 && (!lim.checkpoint_path.empty() || !lim.resume_path.empty()))
        throw Error("checkpointing is only supported in single-threaded searches");

    Budget budget;
    budget.max_nodes = lim.max_nodes;
    if (lim.max_seconds > 0) {
        budget.has_deadline = true;
        budget.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(lim.max_seconds));
    }

    SearchResult res;
    std::vector<std::vector<std::uint64_t>> all_solutions;

    if (lim.threads <= 1) {
        Engine eng(in);
        eng.budget = &budget;
        int st = initial_propagate(eng);
        if (st == 2) throw InfeasibleSeed("seed facets contradict the search constraints");
        if (st == 0) {
            if (!lim.resume_path.empty()) {
                CheckpointData cp = read_checkpoint(lim.resume_path);
                if (cp.fingerprint != in.fingerprint)
                    throw FormatError("checkpoint belongs to a different search problem");
                budget.nodes.store(cp.nodes);
                replay_checkpoint(eng, cp);
            }

            bool finished;
            if (lim.checkpoint_path.empty()) {
                finished = eng.run();
            } else {
                // run in short slices so checkpoints land between decisions
                double interval = std::max(lim.checkpoint_interval_seconds, 0.1);
                auto slice_len = std::chrono::milliseconds(200);
                auto next_dump = std::chrono::steady_clock::now() +
                                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                     std::chrono::duration<double>(interval));
                Budget slice;
                slice.nodes.store(budget.nodes.load());
                slice.max_nodes = budget.max_nodes;
                slice.has_deadline = true;
                eng.budget = &slice;
                while (true) {
                    auto now = std::chrono::steady_clock::now();
                    slice.deadline = now + slice_len;
                    if (budget.has_deadline && budget.deadline < slice.deadline)
                        slice.deadline = budget.deadline;
                    slice.stop.store(false);
                    finished = eng.run();
                    budget.nodes.store(slice.nodes.load());
                    if (finished) break;
                    bool over_nodes = budget.max_nodes && slice.nodes.load() >= budget.max_nodes;
                    bool over_time = budget.has_deadline &&
                                     std::chrono::steady_clock::now() > budget.deadline;
                    if (over_nodes || over_time) break;
                    if (std::chrono::steady_clock::now() >= next_dump) {
                        write_checkpoint(lim.checkpoint_path, in, eng, slice.nodes.load());
                        next_dump = std::chrono::steady_clock::now() +
                                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                        std::chrono::duration<double>(interval));
                    }
                }
            }

            if (!finished) {
                std::string where;
                if (!lim.checkpoint_path.empty()) {
                    write_checkpoint(lim.checkpoint_path, in, eng, budget.nodes.load());
                    where = lim.checkpoint_path;
                }
                throw BudgetExceeded("search budget exhausted after " +
                                         std::to_string(budget.nodes.load()) + " decisions",
                                     where);
            }
            all_solutions = std::move(eng.solutions);
        }
        res.nodes = budget.nodes.load();
    } else {
        // fan the top two branch levels out into independent subtrees
        Engine master(in);
        Budget setup;
        master.budget = &setup;
        int st = initial_propagate(master);
        if (st == 2) throw InfeasibleSeed("seed facets contradict the search constraints");
        std::vector<std::vector<std::pair<int, std::int8_t>>> prefixes;
        if (st == 0) {
            int o1 = master.select_branch();
            if (o1 < 0) {
                master.emit_leaf();
                all_solutions = std::move(master.solutions);
            } else {
                for (std::int8_t v1 : {kIn, kOut}) {
                    std::size_t mark = master.trail.size();
                    if (master.decide(o1, v1)) {
                        int o2 = master.select_branch();
                        if (o2 < 0) {
                            prefixes.push_back({{o1, v1}});
                        } else {
                            prefixes.push_back({{o1, v1}, {o2, kIn}});
                            prefixes.push_back({{o1, v1}, {o2, kOut}});
                        }
                    }
                    master.undo_to(mark);
                }
            }
        }

        std::mutex merge_mu;
        std::atomic<std::size_t> next{0};
        bool exhausted = false;
        auto worker = [&]() {
            while (true) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size() || budget.stop.load()) return;
                Engine eng(in);
                eng.budget = &budget;
                if (initial_propagate(eng) != 0) continue;
                bool viable = true;
                for (auto [o, v] : prefixes[idx])
                    if (!eng.decide(o, v)) {
                        viable = false;
                        break;
                    }
                bool finished = viable ? eng.run() : true;
                std::lock_guard<std::mutex> lk(merge_mu);
                if (!finished) exhausted = true;
                for (auto& s : eng.solutions) all_solutions.push_back(std::move(s));
            }
        };
        int nthreads = static_cast<int>(std::min<std::size_t>(
            static_cast<std::size_t>(lim.threads), std::max<std::size_t>(prefixes.size(), 1)));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        res.nodes = budget.nodes.load();
        if (exhausted)
            throw BudgetExceeded(
                "search budget exhausted after " + std::to_string(res.nodes) + " decisions", "");
    }

    std::sort(all_solutions.begin(), all_solutions.end());
    all_solutions.erase(std::unique(all_solutions.begin(), all_solutions.end()),
                        all_solutions.end());
    res.complexes.reserve(all_solutions.size());
    for (const auto& masks : all_solutions) {
        verify_solution(p, masks);
        std::vector<VertexSet> facets;
        facets.reserve(masks.size());
        for (std::uint64_t m : masks) facets.push_back(VertexSet::from_bits(m));
        res.complexes.push_back(SimplicialComplex::from_facet_sets(p.n, std::move(facets)));
    }
    return res;
}

std::vector<SimplicialComplex> dedup_up_to_iso(const std::vector<SimplicialComplex>& list) {
    std::vector<SimplicialComplex> reps;
    for (const auto& k : list) {
        SimplicialComplex c = canonical_form(k);
        if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
    }
    std::sort(reps.begin(), reps.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.facets() < b.facets();
    });
    return reps;
}

}  // namespace projtri
