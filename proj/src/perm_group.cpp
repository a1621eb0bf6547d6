#include "projtri/perm_group.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace projtri {

namespace {

// Closure of {identity} under right multiplication by gens. Aborts (returns
// false) as soon as the closure exceeds cap; on success fills sorted `out`.
bool close_under(int degree, const std::vector<Permutation>& gens, std::size_t cap,
                 std::vector<Permutation>& out) {
    std::set<Permutation> seen;
    seen.insert(Permutation(degree));
    std::vector<Permutation> queue = {Permutation(degree)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Permutation cur = queue[head];
        for (const Permutation& g : gens) {
            Permutation next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > cap) return false;
                queue.push_back(std::move(next));
            }
        }
    }
    out.assign(seen.begin(), seen.end());
    return true;
}

std::vector<int> flatten(const std::vector<Permutation>& elems) {
    std::vector<int> key;
    for (const auto& p : elems)
        key.insert(key.end(), p.images().begin(), p.images().end());
    return key;
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
    PermGroup g;
    g.degree_ = degree;
    g.elements_ = {Permutation(degree)};
    return g;
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> gens, std::size_t order_cap) {
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw VertexOutOfRange("generator degree does not match group degree");
    PermGroup grp;
    grp.degree_ = degree;
    if (!close_under(degree, gens, order_cap, grp.elements_))
        throw OrderCapExceeded("group closure exceeds cap of " + std::to_string(order_cap));
    grp.gens_ = std::move(gens);
    return grp;
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::same_element_set(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (degree_ != other.degree_) return false;
    for (const auto& p : elements_)
        if (!other.contains(p)) return false;
    return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
    if (!is_subgroup_of(g)) return false;
    for (const auto& c : g.generators()) {
        Permutation ci = c.inverse();
        for (const auto& h : elements_)
            if (!contains(c * h * ci)) return false;
    }
    return true;
}

bool PermGroup::is_abelian() const {
    for (const auto& a : gens_)
        for (const auto& b : gens_)
            if (!(a * b == b * a)) return false;
    return true;
}

VertexSet PermGroup::orbit_of(int v) const {
    if (v < 1 || v > degree_) throw VertexOutOfRange("orbit point outside 1..degree");
    VertexSet orb = VertexSet::of({v});
    std::vector<int> queue = {v};
    const std::vector<Permutation>& via = gens_.empty() ? elements_ : gens_;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& g : via) {
            int w = g(queue[head]);
            if (!orb.contains(w)) {
                orb.add(w);
                queue.push_back(w);
            }
        }
    return orb;
}

std::vector<VertexSet> PermGroup::orbits() const {
    std::vector<VertexSet> out;
    VertexSet done;
    for (int v = 1; v <= degree_; ++v) {
        if (done.contains(v)) continue;
        VertexSet orb = orbit_of(v);
        done |= orb;
        out.push_back(orb);
    }
    return out;
}

std::vector<int> PermGroup::orbit_lengths() const {
    std::vector<int> lens;
    for (VertexSet orb : orbits()) lens.push_back(orb.size());
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

PermGroup PermGroup::stabilizer(int v) const {
    if (v < 1 || v > degree_) throw VertexOutOfRange("stabilizer point outside 1..degree");
    PermGroup g;
    g.degree_ = degree_;
    for (const auto& p : elements_)
        if (p(v) == v) g.elements_.push_back(p);
    for (const auto& p : g.elements_)
        if (!p.is_identity()) g.gens_.push_back(p);
    return g;
}

std::map<long long, std::size_t> PermGroup::element_order_multiset() const {
    std::map<long long, std::size_t> m;
    for (const auto& p : elements_) ++m[p.order()];
    return m;
}

std::vector<PermGroup> PermGroup::subgroups_of_order(std::size_t k, int max_generators) const {
    std::vector<PermGroup> found;
    if (k == 0 || order() % k != 0) return found;
    if (k == 1) {
        found.push_back(trivial(degree_));
        return found;
    }

    // candidate generators: nontrivial elements whose order divides k
    std::vector<Permutation> cand;
    for (const auto& p : elements_)
        if (!p.is_identity() && k % static_cast<std::size_t>(p.order()) == 0) cand.push_back(p);

    std::set<std::vector<int>> result_keys;

    struct State {
        std::vector<Permutation> gens;
        std::vector<Permutation> elems;
        std::size_t next;  // candidates below this index are not retried
    };
    std::vector<State> stack;
    stack.push_back({{}, {Permutation(degree_)}, 0});

    while (!stack.empty()) {
        State st = std::move(stack.back());
        stack.pop_back();
        for (std::size_t i = st.next; i < cand.size(); ++i) {
            if (std::binary_search(st.elems.begin(), st.elems.end(), cand[i])) continue;
            std::vector<Permutation> gens = st.gens;
            gens.push_back(cand[i]);
            std::vector<Permutation> closure;
            if (!close_under(degree_, gens, k, closure)) continue;  // grew past k
            if (k % closure.size() != 0) continue;                  // cannot sit inside an order-k group
            if (closure.size() == k) {
                if (result_keys.insert(flatten(closure)).second) {
                    PermGroup g;
                    g.degree_ = degree_;
                    g.gens_ = std::move(gens);
                    g.elements_ = std::move(closure);
                    found.push_back(std::move(g));
                }
                continue;
            }
            if (static_cast<int>(gens.size()) >= max_generators) continue;
            stack.push_back({std::move(gens), std::move(closure), i + 1});
        }
    }

    std::sort(found.begin(), found.end(),
              [](const PermGroup& a, const PermGroup& b) { return a.elements() < b.elements(); });
    return found;
}

std::vector<PermGroup> PermGroup::all_subgroups() const {
    std::set<std::vector<int>> seen;
    std::vector<PermGroup> out;
    std::vector<std::size_t> queue;

    PermGroup triv = trivial(degree_);
    seen.insert(flatten(triv.elements()));
    out.push_back(std::move(triv));
    queue.push_back(0);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        // copy: out may reallocate as subgroups are appended
        const PermGroup h = out[queue[head]];
        for (const auto& g : elements_) {
            if (h.contains(g)) continue;
            std::vector<Permutation> gens = h.generators();
            gens.push_back(g);
            std::vector<Permutation> closure;
            close_under(degree_, gens, order(), closure);
            if (!seen.insert(flatten(closure)).second) continue;
            PermGroup sub;
            sub.degree_ = degree_;
            sub.gens_ = std::move(gens);
            sub.elements_ = std::move(closure);
            out.push_back(std::move(sub));
            queue.push_back(out.size() - 1);
        }
    }

    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        return std::make_pair(a.order(), a.elements()) < std::make_pair(b.order(), b.elements());
    });
    return out;
}

void PermGroup::write(std::ostream& os) const {
    os << "degree " << degree_ << "\n";
    const std::vector<Permutation>* gens = &gens_;
    std::vector<Permutation> fallback;
    if (gens_.empty() && order() > 1) {
        fallback = elements_;
        gens = &fallback;
    }
    for (const auto& g : *gens)
        if (!g.is_identity()) os << "gen " << g.cycle_string() << "\n";
}

PermGroup PermGroup::read(std::istream& is, std::size_t order_cap) {
    int degree = -1;
    std::vector<std::string> gen_lines;
    std::string line;
    while (std::getline(is, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "degree") {
            if (!(ls >> degree)) throw FormatError("bad degree line");
        } else if (key == "gen") {
            std::string rest;
            std::getline(ls, rest);
            gen_lines.push_back(rest);
        } else {
            throw FormatError("unknown key '" + key + "' in group file");
        }
    }
    if (degree < 0) throw FormatError("missing degree line");
    std::vector<Permutation> gens;
    for (const auto& s : gen_lines) gens.push_back(Permutation::from_cycles(degree, s));
    return generate(degree, std::move(gens), order_cap);
}

}  // namespace projtri
