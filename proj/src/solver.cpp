#include "sethforge/solver.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

namespace sethforge {

namespace {

using u128 = unsigned __int128;
using i64 = std::int64_t;

constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

enum class Dir { minimize, maximize, feas };

struct KindTraits {
    int bits = 2;
    int alphabet = 2;
    Dir dir = Dir::feas;
    int contributing = -1;  // value that counts toward cost-member spends
    int rejected_forget_value = -1;
};

KindTraits traits_for(ProblemKind k, int q) {
    switch (k) {
        case ProblemKind::IndependentSet: return {2, 2, Dir::maximize, 1, -1};
        case ProblemKind::DominatingSet: return {2, 3, Dir::minimize, 0, 2};
        case ProblemKind::MaxCut: return {2, 2, Dir::maximize, -1, -1};
        case ProblemKind::QColoring:
        case ProblemKind::QListColoring:
            if (q < 2 || q > 15) fail("cap-exceeded", "coloring supports 2 <= q <= 15");
            return {4, q, Dir::feas, -1, -1};
        case ProblemKind::OddCycleTransversal: return {2, 3, Dir::minimize, 0, -1};
        case ProblemKind::TrianglePacking: return {2, 2, Dir::maximize, -1, -1};
        case ProblemKind::PartitionIntoTriangles: return {2, 2, Dir::feas, -1, 0};
    }
    fail("invalid-kind", "unknown kind enum");
}

struct Entry {
    u128 key = 0;
    std::uint32_t spent = 0;
    i64 cost = 0;
    std::uint32_t parent = 0;
};

struct StepPre {
    bool is_intro = false;
    int vertex = -1;
    int slot = -1;
    int member = -1;
    std::vector<std::pair<int, i64>> nbr_slots;        // (slot, edge weight)
    std::vector<std::pair<int, int>> pack_pairs;       // adjacent neighbor slot pairs
    std::vector<std::pair<int, int>> pack_pair_verts;  // same pairs as vertices
    i64 tail_potential = 0;
};

struct RunPre {
    bool is_intro = false;
    int first_step = 0, last_step = 0;
    int live_after = 0;
    i64 h_static = 0;
    i64 u_static = 0;
    std::vector<int> open_members;
    std::vector<int> closing_members;
};

struct MemberInfo {
    std::vector<int> verts;
    i64 value = 0;
    int first_intro = INT_MAX;
    int last_intro = -1;
    int spent_slot = -1;
};

inline int get_val(u128 key, int slot, int bits) {
    return static_cast<int>((key >> (slot * bits)) & ((u128(1) << bits) - 1));
}

inline u128 set_val(u128 key, int slot, int bits, int v) {
    u128 mask = ((u128(1) << bits) - 1) << (slot * bits);
    return (key & ~mask) | (u128(v) << (slot * bits));
}

inline int get_spent(std::uint32_t spent, int byte) { return (spent >> (byte * 8)) & 0xff; }

inline std::uint32_t bump_spent(std::uint32_t spent, int byte) {
    if (get_spent(spent, byte) >= 255) return spent;
    return spent + (1u << (byte * 8));
}

inline std::uint32_t clear_spent(std::uint32_t spent, int byte) {
    return spent & ~(0xffu << (byte * 8));
}

class Engine {
public:
    Engine(const Graph& g, const NicePathDecomposition& nd, ProblemKind kind, int q,
           const std::map<int, std::vector<int>>& lists, std::vector<MemberInfo> members,
           const SolveOptions& opts)
        : graph_(g), kind_(kind), traits_(traits_for(kind, q)), opts_(opts),
          members_(std::move(members)) {
        build_schedule(nd, lists);
    }

    bool run(i64 bound, bool record, i64* best, i64* next_threshold);
    Solution extract_witness();

    SolveStats& stats() { return stats_; }
    Dir dir() const { return traits_.dir; }
    i64 h_root() const { return h_root_; }
    i64 u_root() const { return u_root_; }

private:
    void build_schedule(const NicePathDecomposition& nd, const std::map<int, std::vector<int>>& lists);
    void intro_options(const StepPre& s, const Entry& e,
                       std::vector<std::tuple<u128, std::uint32_t, i64>>& out) const;

    const Graph& graph_;
    ProblemKind kind_;
    KindTraits traits_;
    SolveOptions opts_;
    std::vector<MemberInfo> members_;

    std::vector<StepPre> steps_;
    std::vector<RunPre> runs_;
    std::vector<int> slot_of_;
    std::vector<std::vector<int>> allowed_values_;
    std::vector<int> full_palette_;
    bool list_mode_ = false;
    i64 h_root_ = 0, u_root_ = 0;

    SolveStats stats_;
    std::vector<std::vector<Entry>> tables_;
};

void Engine::build_schedule(const NicePathDecomposition& nd,
                            const std::map<int, std::vector<int>>& lists) {
    const int n = graph_.num_vertices();
    slot_of_.assign(n, -1);
    list_mode_ = kind_ == ProblemKind::QListColoring;
    full_palette_.resize(traits_.alphabet);
    std::iota(full_palette_.begin(), full_palette_.end(), 0);
    if (list_mode_) {
        allowed_values_.assign(n, {});
        for (int v = 0; v < n; ++v) {
            auto it = lists.find(v);
            if (it == lists.end()) {
                allowed_values_[v] = full_palette_;
            } else {
                for (int c : it->second) {
                    if (c < 1 || c > traits_.alphabet) fail("invalid-list", "color out of range");
                    allowed_values_[v].push_back(c - 1);
                }
            }
        }
    }

    const int max_slots = 128 / traits_.bits;
    std::vector<int> free_slots;
    int high_water = 0;
    int live_now = 0;
    auto alloc_slot = [&]() {
        ++live_now;
        if (!free_slots.empty()) {
            std::pop_heap(free_slots.begin(), free_slots.end(), std::greater<>());
            int s = free_slots.back();
            free_slots.pop_back();
            return s;
        }
        if (high_water >= max_slots) fail("cap-exceeded", "live set exceeds packed state capacity");
        return high_water++;
    };
    auto release_slot = [&](int s) {
        --live_now;
        free_slots.push_back(s);
        std::push_heap(free_slots.begin(), free_slots.end(), std::greater<>());
    };

    std::vector<int> member_of(n, -1);
    for (int mi = 0; mi < static_cast<int>(members_.size()); ++mi)
        for (int v : members_[mi].verts) {
            if (member_of[v] != -1) fail("hint-overlap", "vertex in two cost members");
            member_of[v] = mi;
        }

    std::vector<int> live_after_step;
    steps_.reserve(nd.steps.size());
    for (const auto& st : nd.steps) {
        StepPre sp;
        sp.vertex = st.vertex;
        if (st.kind == NicePathDecomposition::Step::Introduce) {
            sp.is_intro = true;
            sp.slot = alloc_slot();
            slot_of_[st.vertex] = sp.slot;
            sp.member = member_of[st.vertex];
            for (const auto& [w, weight] : st.live_neighbors)
                sp.nbr_slots.push_back({slot_of_[w], weight});
            if (kind_ == ProblemKind::TrianglePacking || kind_ == ProblemKind::PartitionIntoTriangles) {
                const auto& nb = st.live_neighbors;
                for (std::size_t a = 0; a < nb.size(); ++a)
                    for (std::size_t b = a + 1; b < nb.size(); ++b)
                        if (graph_.has_edge(nb[a].first, nb[b].first)) {
                            sp.pack_pairs.push_back({slot_of_[nb[a].first], slot_of_[nb[b].first]});
                            sp.pack_pair_verts.push_back({nb[a].first, nb[b].first});
                        }
            }
            int si = static_cast<int>(steps_.size());
            if (sp.member >= 0) {
                members_[sp.member].first_intro = std::min(members_[sp.member].first_intro, si);
                members_[sp.member].last_intro = std::max(members_[sp.member].last_intro, si);
            }
        } else {
            sp.is_intro = false;
            sp.slot = slot_of_[st.vertex];
            release_slot(sp.slot);
        }
        steps_.push_back(std::move(sp));
        live_after_step.push_back(live_now);
    }

    // In-flight spend tracking: four per-state byte counters, first come first
    // served; members beyond that fall back to the static bound only.
    {
        std::vector<int> free_bytes = {3, 2, 1, 0};
        std::vector<std::pair<int, int>> events;
        for (int mi = 0; mi < static_cast<int>(members_.size()); ++mi) {
            const auto& m = members_[mi];
            if (m.first_intro == INT_MAX || m.first_intro == m.last_intro) continue;
            events.push_back({m.first_intro, mi + 1});
            events.push_back({m.last_intro, -(mi + 1)});
        }
        std::sort(events.begin(), events.end(), [](auto& a, auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        for (auto& [step, ev] : events) {
            if (ev > 0) {
                if (!free_bytes.empty()) {
                    members_[ev - 1].spent_slot = free_bytes.back();
                    free_bytes.pop_back();
                }
            } else if (members_[-ev - 1].spent_slot >= 0) {
                free_bytes.push_back(members_[-ev - 1].spent_slot);
            }
        }
    }

    for (int i = 0; i < static_cast<int>(steps_.size());) {
        int j = i;
        while (j < static_cast<int>(steps_.size()) && steps_[j].is_intro == steps_[i].is_intro) ++j;
        RunPre r;
        r.is_intro = steps_[i].is_intro;
        r.first_step = i;
        r.last_step = j - 1;
        r.live_after = live_after_step[j - 1];
        runs_.push_back(r);
        i = j;
    }

    auto step_potential = [&](const StepPre& s) -> i64 {
        if (!s.is_intro) return 0;
        switch (kind_) {
            case ProblemKind::IndependentSet: return s.member >= 0 ? 0 : 1;
            case ProblemKind::TrianglePacking: return 1;
            case ProblemKind::MaxCut: {
                i64 w = 0;
                for (auto& [slot, weight] : s.nbr_slots) w += weight;
                return w;
            }
            default: return 0;
        }
    };

    std::vector<i64> member_start_at(steps_.size() + 1, 0);
    for (const auto& m : members_)
        if (m.first_intro != INT_MAX) member_start_at[m.first_intro] += m.value;
    std::vector<i64> members_after(steps_.size() + 1, 0);
    std::vector<i64> trivial_after(steps_.size() + 1, 0);
    for (int i = static_cast<int>(steps_.size()) - 1; i >= 0; --i) {
        members_after[i] = members_after[i + 1] + member_start_at[i];
        trivial_after[i] = trivial_after[i + 1] + step_potential(steps_[i]);
    }
    h_root_ = members_after[0];
    u_root_ = members_after[0] + trivial_after[0];

    for (auto& r : runs_) {
        int after = r.last_step + 1;
        r.h_static = members_after[after];
        r.u_static = members_after[after] + trivial_after[after];
        for (int mi = 0; mi < static_cast<int>(members_.size()); ++mi) {
            const auto& m = members_[mi];
            if (m.first_intro == INT_MAX) continue;
            if (m.first_intro <= r.last_step && m.last_intro >= r.first_step) {
                r.open_members.push_back(mi);
                if (m.last_intro <= r.last_step && m.spent_slot >= 0) r.closing_members.push_back(mi);
            }
        }
    }

    for (const auto& r : runs_) {
        if (!r.is_intro) continue;
        i64 tail = 0;
        for (int s = r.last_step; s >= r.first_step; --s) {
            tail += step_potential(steps_[s]);
            steps_[s].tail_potential = tail;
        }
    }
}

void Engine::intro_options(const StepPre& s, const Entry& e,
                           std::vector<std::tuple<u128, std::uint32_t, i64>>& out) const {
    out.clear();
    const int bits = traits_.bits;
    auto push = [&](int value, i64 dcost, u128 key, bool use_key) {
        u128 nk = use_key ? key : set_val(e.key, s.slot, bits, value);
        std::uint32_t nspent = e.spent;
        if (s.member >= 0 && members_[s.member].spent_slot >= 0 && value == traits_.contributing)
            nspent = bump_spent(nspent, members_[s.member].spent_slot);
        out.push_back({nk, nspent, e.cost + dcost});
    };

    switch (kind_) {
        case ProblemKind::IndependentSet: {
            push(0, 0, 0, false);
            bool ok = true;
            for (auto& [slot, w] : s.nbr_slots)
                if (get_val(e.key, slot, bits) == 1) { ok = false; break; }
            if (ok) push(1, 1, 0, false);
            break;
        }
        case ProblemKind::DominatingSet: {
            bool dominated = false;
            for (auto& [slot, w] : s.nbr_slots)
                if (get_val(e.key, slot, bits) == 0) { dominated = true; break; }
            push(dominated ? 1 : 2, 0, 0, false);
            u128 nk = set_val(e.key, s.slot, bits, 0);
            for (auto& [slot, w] : s.nbr_slots)
                if (get_val(nk, slot, bits) == 2) nk = set_val(nk, slot, bits, 1);
            push(0, 1, nk, true);
            break;
        }
        case ProblemKind::MaxCut: {
            for (int side = 0; side < 2; ++side) {
                i64 gain = 0;
                for (auto& [slot, w] : s.nbr_slots)
                    if (get_val(e.key, slot, bits) != side) gain += w;
                push(side, gain, 0, false);
            }
            break;
        }
        case ProblemKind::QColoring:
        case ProblemKind::QListColoring: {
            const std::vector<int>& allowed = list_mode_ ? allowed_values_[s.vertex] : full_palette_;
            for (int c : allowed) {
                bool ok = true;
                for (auto& [slot, w] : s.nbr_slots)
                    if (get_val(e.key, slot, bits) == c) { ok = false; break; }
                if (ok) push(c, 0, 0, false);
            }
            break;
        }
        case ProblemKind::OddCycleTransversal: {
            push(0, 1, 0, false);
            for (int side = 1; side <= 2; ++side) {
                bool ok = true;
                for (auto& [slot, w] : s.nbr_slots)
                    if (get_val(e.key, slot, bits) == side) { ok = false; break; }
                if (ok) push(side, 0, 0, false);
            }
            break;
        }
        case ProblemKind::TrianglePacking:
        case ProblemKind::PartitionIntoTriangles: {
            push(0, 0, 0, false);
            for (auto& [sx, sy] : s.pack_pairs) {
                if (get_val(e.key, sx, bits) != 0 || get_val(e.key, sy, bits) != 0) continue;
                u128 nk = set_val(e.key, s.slot, bits, 1);
                nk = set_val(nk, sx, bits, 1);
                nk = set_val(nk, sy, bits, 1);
                push(1, 1, nk, true);
            }
            break;
        }
    }
}

bool Engine::run(i64 bound, bool record, i64* best, i64* next_threshold) {
    const int bits = traits_.bits;
    const bool minimizing = traits_.dir == Dir::minimize;
    const bool maximizing = traits_.dir == Dir::maximize;
    const bool bounded = traits_.dir != Dir::feas && bound < kInf && bound > -kInf;
    i64 threshold_probe = minimizing ? kInf : -kInf;

    tables_.clear();
    std::vector<Entry> cur;
    cur.push_back(Entry{0, 0, 0, 0});
    if (record) tables_.push_back(cur);

    auto dedup = [&](std::vector<Entry>& v, int live) {
        std::sort(v.begin(), v.end(), [&](const Entry& a, const Entry& b) {
            if (a.key != b.key) return a.key < b.key;
            if (a.spent != b.spent) return a.spent < b.spent;
            if (a.cost != b.cost) return maximizing ? a.cost > b.cost : a.cost < b.cost;
            return a.parent < b.parent;
        });
        std::vector<Entry> out;
        out.reserve(v.size());
        i64 distinct_keys = 0;
        for (const Entry& e : v) {
            if (!out.empty() && out.back().key == e.key && out.back().spent == e.spent) continue;
            if (out.empty() || out.back().key != e.key) ++distinct_keys;
            out.push_back(e);
        }
        v = std::move(out);
        stats_.max_states = std::max(stats_.max_states, distinct_keys);
        // State-count law: distinct per-vertex state vectors never exceed
        // alphabet^live.
        long double lim = 1;
        for (int i = 0; i < live && lim <= 1e18L; ++i) lim *= traits_.alphabet;
        if (lim <= 1e18L && distinct_keys > static_cast<i64>(lim)) stats_.state_law_violated = true;
        if (static_cast<i64>(v.size()) > opts_.state_cap)
            fail("cap-exceeded", "state table exceeds cap of " + std::to_string(opts_.state_cap) + " states");
    };

    std::vector<std::tuple<u128, std::uint32_t, i64>> options;
    for (std::size_t ri = 0; ri < runs_.size() && !cur.empty(); ++ri) {
        const RunPre& r = runs_[ri];
        std::vector<Entry> next;
        next.reserve(cur.size());

        auto state_h = [&](std::uint32_t spent) {
            i64 h = r.h_static;
            for (int mi : r.open_members) {
                const auto& m = members_[mi];
                if (m.spent_slot < 0) continue;
                i64 rem = m.value - get_spent(spent, m.spent_slot);
                if (rem > 0) h += rem;
            }
            return h;
        };
        auto state_u = [&](std::uint32_t spent, i64 tail) {
            i64 u = r.u_static + tail;
            for (int mi : r.open_members) {
                const auto& m = members_[mi];
                if (m.spent_slot < 0) { u += m.value; continue; }
                i64 rem = m.value - get_spent(spent, m.spent_slot);
                if (rem > 0) u += rem;
            }
            return u;
        };
        auto finish_entry = [&](Entry e) {
            if (bounded) {
                if (minimizing) {
                    i64 g = e.cost + state_h(e.spent);
                    if (g > bound) { threshold_probe = std::min(threshold_probe, g); return; }
                } else {
                    i64 g = e.cost + state_u(e.spent, 0);
                    if (g < bound) { threshold_probe = std::max(threshold_probe, g); return; }
                }
            }
            for (int mi : r.closing_members) e.spent = clear_spent(e.spent, members_[mi].spent_slot);
            ++stats_.transitions;
            next.push_back(e);
        };

        if (!r.is_intro) {
            for (std::uint32_t idx = 0; idx < cur.size(); ++idx) {
                Entry e = cur[idx];
                bool ok = true;
                for (int si = r.first_step; si <= r.last_step && ok; ++si) {
                    const StepPre& s = steps_[si];
                    if (get_val(e.key, s.slot, bits) == traits_.rejected_forget_value) ok = false;
                    e.key = set_val(e.key, s.slot, bits, 0);
                }
                if (!ok) continue;
                e.parent = idx;
                finish_entry(e);
            }
        } else {
            struct Frame {
                int step;
                Entry e;
            };
            std::vector<Frame> stack;
            for (std::uint32_t idx = 0; idx < cur.size(); ++idx) {
                stack.push_back({r.first_step, Entry{cur[idx].key, cur[idx].spent, cur[idx].cost, idx}});
                while (!stack.empty()) {
                    Frame f = stack.back();
                    stack.pop_back();
                    if (f.step > r.last_step) {
                        finish_entry(f.e);
                        continue;
                    }
                    if (bounded) {
                        if (minimizing) {
                            i64 g = f.e.cost + state_h(f.e.spent);
                            if (g > bound) { threshold_probe = std::min(threshold_probe, g); continue; }
                        } else {
                            i64 g = f.e.cost + state_u(f.e.spent, steps_[f.step].tail_potential);
                            if (g < bound) { threshold_probe = std::max(threshold_probe, g); continue; }
                        }
                    }
                    intro_options(steps_[f.step], f.e, options);
                    for (auto it = options.rbegin(); it != options.rend(); ++it)
                        stack.push_back({f.step + 1,
                                         Entry{std::get<0>(*it), std::get<1>(*it), std::get<2>(*it), f.e.parent}});
                }
            }
        }
        dedup(next, r.live_after);
        cur = std::move(next);
        if (record) tables_.push_back(cur);
    }

    if (cur.empty()) {
        *best = minimizing ? kInf : -kInf;
        *next_threshold = threshold_probe;
        return false;
    }
    i64 b = cur.front().cost;
    for (const Entry& e : cur) b = minimizing ? std::min(b, e.cost) : std::max(b, e.cost);
    *best = b;
    *next_threshold = threshold_probe;
    return true;
}

Solution Engine::extract_witness() {
    if (tables_.size() != runs_.size() + 1 || tables_.back().empty())
        fail("internal", "no witness tables retained");
    std::vector<int> value_of(graph_.num_vertices(), -1);
    std::vector<std::array<int, 3>> triangles;

    const bool minimizing = traits_.dir == Dir::minimize;
    const auto& last = tables_.back();
    std::uint32_t idx = 0;
    if (traits_.dir != Dir::feas)
        for (std::uint32_t i = 1; i < last.size(); ++i)
            if (minimizing ? last[i].cost < last[idx].cost : last[i].cost > last[idx].cost) idx = i;

    std::vector<std::tuple<u128, std::uint32_t, i64>> options;
    for (int ri = static_cast<int>(runs_.size()) - 1; ri >= 0; --ri) {
        const RunPre& r = runs_[ri];
        const Entry& child = tables_[ri + 1][idx];
        const Entry& parent = tables_[ri][child.parent];
        if (!r.is_intro) {
            for (int si = r.first_step; si <= r.last_step; ++si) {
                const StepPre& s = steps_[si];
                value_of[s.vertex] = get_val(parent.key, s.slot, traits_.bits);
            }
        } else {
            struct Frame {
                int step;
                Entry e;
                std::vector<std::pair<int, int>> vals;
                std::vector<std::array<int, 3>> tris;
            };
            std::vector<Frame> stack;
            stack.push_back({r.first_step, Entry{parent.key, parent.spent, parent.cost, 0}, {}, {}});
            bool matched = false;
            while (!stack.empty() && !matched) {
                Frame f = std::move(stack.back());
                stack.pop_back();
                if (f.step > r.last_step) {
                    Entry probe = f.e;
                    for (int mi : r.closing_members) probe.spent = clear_spent(probe.spent, members_[mi].spent_slot);
                    if (probe.key == child.key && probe.spent == child.spent && probe.cost == child.cost) {
                        for (auto& [v, val] : f.vals) value_of[v] = val;
                        for (auto& t : f.tris) triangles.push_back(t);
                        matched = true;
                    }
                    continue;
                }
                const StepPre& s = steps_[f.step];
                intro_options(s, f.e, options);
                std::vector<Frame> children;
                children.reserve(options.size());
                for (const auto& [nk, nspent, ncost] : options) {
                    Frame nf = f;
                    nf.step = f.step + 1;
                    nf.e = Entry{nk, nspent, ncost, 0};
                    int val = get_val(nk, s.slot, traits_.bits);
                    nf.vals.push_back({s.vertex, val});
                    if (!s.pack_pairs.empty() && val == 1) {
                        for (std::size_t pi = 0; pi < s.pack_pairs.size(); ++pi) {
                            auto [sx, sy] = s.pack_pairs[pi];
                            if (get_val(f.e.key, sx, traits_.bits) == 0 && get_val(nk, sx, traits_.bits) == 1 &&
                                get_val(f.e.key, sy, traits_.bits) == 0 && get_val(nk, sy, traits_.bits) == 1) {
                                nf.tris.push_back({s.vertex, s.pack_pair_verts[pi].first,
                                                   s.pack_pair_verts[pi].second});
                                break;
                            }
                        }
                    }
                    children.push_back(std::move(nf));
                }
                for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
            }
            if (!matched) fail("internal", "witness re-derivation failed");
        }
        idx = child.parent;
    }

    Solution sol;
    sol.kind = kind_;
    switch (kind_) {
        case ProblemKind::IndependentSet:
            for (int v = 0; v < graph_.num_vertices(); ++v)
                if (value_of[v] == 1) sol.vertex_set.push_back(v);
            break;
        case ProblemKind::DominatingSet:
        case ProblemKind::OddCycleTransversal:
            for (int v = 0; v < graph_.num_vertices(); ++v)
                if (value_of[v] == 0) sol.vertex_set.push_back(v);
            break;
        case ProblemKind::MaxCut:
            sol.side_of.assign(value_of.begin(), value_of.end());
            break;
        case ProblemKind::QColoring:
        case ProblemKind::QListColoring:
            sol.color_of.resize(graph_.num_vertices());
            for (int v = 0; v < graph_.num_vertices(); ++v) sol.color_of[v] = value_of[v] + 1;
            break;
        case ProblemKind::TrianglePacking:
        case ProblemKind::PartitionIntoTriangles:
            sol.triangles = triangles;
            break;
    }
    return sol;
}

i64 member_value(const Graph& g, const PathDecomposition& d, ProblemKind kind, int q,
                 const CostMember& m) {
    if (kind == ProblemKind::DominatingSet) {
        std::vector<char> inside(g.num_vertices(), 0);
        for (int v : m.vertices) inside[v] = 1;
        for (int v : m.vertices) {
            bool closed = true;
            for (auto& [w, idx] : g.neighbors(v))
                if (!inside[w]) { closed = false; break; }
            if (closed) return 1;
        }
        return 0;
    }
    static std::map<std::pair<int, std::string>, i64> cache;
    auto key = std::make_pair(static_cast<int>(kind), m.shape_tag);
    if (!m.shape_tag.empty()) {
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Graph sub = g.induced(m.vertices);
    PathDecomposition sd = d.restricted_to(m.vertices);
    SolveOptions sub_opts;
    sub_opts.use_hints = false;
    Answer a = solve_raw(sub, sd, kind, q, {}, std::nullopt, Sense::feasible, {}, sub_opts);
    i64 v = a.optimum.value_or(0);
    if (!m.shape_tag.empty()) cache[key] = v;
    return v;
}

} // namespace

std::int64_t default_state_cap() {
    if (const char* env = std::getenv("SETHFORGE_STATE_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return i64{1} << 28;
}

Answer solve_raw(const Graph& g, const PathDecomposition& d, ProblemKind kind, int q,
                 const std::map<int, std::vector<int>>& lists,
                 std::optional<std::int64_t> target, Sense sense,
                 const std::vector<CostMember>& cost_family, const SolveOptions& opts) {
    if (g.num_vertices() == 0) {
        Answer a;
        a.optimum = 0;
        a.feasible = true;
        if (target) a.verdict = sense == Sense::at_least ? (0 >= *target) : (0 <= *target);
        if (opts.want_witness) a.solution = Solution{kind, {}, {}, {}, {}};
        return a;
    }
    NicePathDecomposition nd = nicify(g, d);

    std::vector<MemberInfo> members;
    bool member_kind = kind == ProblemKind::IndependentSet || kind == ProblemKind::DominatingSet ||
                       kind == ProblemKind::OddCycleTransversal;
    if (opts.use_hints && member_kind) {
        for (const CostMember& cm : cost_family) {
            i64 v = member_value(g, d, kind, q, cm);
            if (v <= 0) continue;
            MemberInfo mi;
            mi.verts = cm.vertices;
            mi.value = v;
            members.push_back(std::move(mi));
        }
    }
    bool has_members = !members.empty();

    Engine eng(g, nd, kind, q, lists, std::move(members), opts);

    Answer ans;
    if (eng.dir() == Dir::feas) {
        i64 best, nt;
        bool found = eng.run(kInf, opts.want_witness, &best, &nt);
        ans.feasible = found;
        ans.optimum = found ? std::optional<i64>(best) : std::nullopt;
        ans.verdict = found;
        ans.stats = eng.stats();
        if (found && opts.want_witness) ans.solution = eng.extract_witness();
        return ans;
    }

    const bool minimizing = eng.dir() == Dir::minimize;
    auto set_verdict = [&]() {
        if (target && ans.optimum)
            ans.verdict = sense == Sense::at_least ? (*ans.optimum >= *target) : (*ans.optimum <= *target);
    };

    if (opts.decision_only && target) {
        ans.feasible = true;
        if (minimizing && eng.h_root() > *target) {
            ans.verdict = false;
            ans.stats = eng.stats();
            return ans;
        }
        if (!minimizing && eng.u_root() < *target) {
            ans.verdict = false;
            ans.stats = eng.stats();
            return ans;
        }
        i64 best, nt;
        bool found = eng.run(*target, opts.want_witness, &best, &nt);
        ans.stats = eng.stats();
        if (found) {
            ans.optimum = best;
            set_verdict();
            if (opts.want_witness) ans.solution = eng.extract_witness();
        } else {
            ans.verdict = false;
        }
        return ans;
    }

    i64 bound;
    if (!has_members && !target) {
        bound = minimizing ? kInf : -kInf;  // plain exhaustive sweep
    } else {
        bound = minimizing ? std::max(eng.h_root(), target.value_or(eng.h_root()))
                           : std::min(eng.u_root(), target.value_or(eng.u_root()));
    }
    int iter = 0;
    while (true) {
        if (++iter > opts.max_iterations) fail("cap-exceeded", "solver iteration limit reached");
        i64 best, nt;
        bool found = eng.run(bound, opts.want_witness, &best, &nt);
        if (found) {
            ans.optimum = best;
            ans.feasible = true;
            ans.stats = eng.stats();
            ans.stats.iterations = iter;
            set_verdict();
            if (opts.want_witness) ans.solution = eng.extract_witness();
            return ans;
        }
        if (minimizing) {
            if (nt >= kInf) fail("infeasible", "no state survived an unbounded sweep");
            bound = std::max(bound + 1, nt);
        } else {
            if (nt <= -kInf) fail("infeasible", "no state survived an unbounded sweep");
            bound = std::min(bound - 1, nt);
        }
    }
}

Answer solve(const Instance& inst, const SolveOptions& opts) {
    int q = inst.meta.q.value_or(3);
    return solve_raw(inst.graph, inst.decomposition, inst.kind, q, inst.lists, inst.target,
                     inst.sense, inst.cost_family, opts);
}

} // namespace sethforge
