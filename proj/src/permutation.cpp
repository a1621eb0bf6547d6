#include "projtri/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace projtri {

Permutation::Permutation(int n) {
    if (n < 0 || n > 64) throw VertexOutOfRange("permutation degree outside 0..64");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    if (n > 64) throw VertexOutOfRange("permutation degree outside 0..64");
    VertexSet seen;
    for (int w : images) {
        if (w < 1 || w > n) throw VertexOutOfRange("permutation image out of range");
        seen.add(w);
    }
    if (n > 0 && seen != VertexSet::full(n)) throw VertexOutOfRange("images not a bijection");
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, std::string_view text) {
    Permutation result(n);
    std::string buf(text);
    for (char& c : buf)
        if (c == ',') c = ' ';
    std::istringstream is(buf);
    char ch;
    while (is >> ch) {
        if (ch != '(') throw FormatError("expected '(' in cycle notation");
        std::vector<int> cyc;
        while (true) {
            is >> std::ws;
            if (is.peek() == ')') {
                is.get();
                break;
            }
            int v;
            if (!(is >> v)) throw FormatError("bad cycle entry");
            if (v < 1 || v > n) throw VertexOutOfRange("cycle entry outside 1..n");
            cyc.push_back(v);
        }
        if (cyc.size() < 2) continue;  // "(x)" and "()" are identity factors
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (img[from - 1] != from) throw FormatError("repeated entry inside one cycle");
            img[from - 1] = to;
        }
        result = result * from_images(std::move(img));
    }
    return result;
}

VertexSet Permutation::operator()(VertexSet s) const {
    VertexSet out;
    s.for_each([&](int v) { out.add(img_[v - 1]); });
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw VertexOutOfRange("composing permutations of different degree");
    std::vector<int> img(a.degree());
    for (int x = 1; x <= a.degree(); ++x) img[x - 1] = a(b(x));
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(degree());
    for (int x = 1; x <= degree(); ++x) img[img_[x - 1] - 1] = x;
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if (img_[x - 1] != x) return false;
    return true;
}

long long Permutation::order() const {
    long long ord = 1;
    for (const auto& [len, cnt] : cycle_type()) ord = std::lcm<long long>(ord, len);
    return ord;
}

std::map<int, int> Permutation::cycle_type() const {
    std::map<int, int> type;
    VertexSet done;
    for (int x = 1; x <= degree(); ++x) {
        if (done.contains(x)) continue;
        int len = 0, y = x;
        do {
            done.add(y);
            y = img_[y - 1];
            ++len;
        } while (y != x);
        ++type[len];
    }
    return type;
}

VertexSet Permutation::fixed_points() const {
    VertexSet fp;
    for (int x = 1; x <= degree(); ++x)
        if (img_[x - 1] == x) fp.add(x);
    return fp;
}

std::string Permutation::cycle_string() const {
    std::string s;
    VertexSet done;
    for (int x = 1; x <= degree(); ++x) {
        if (done.contains(x) || img_[x - 1] == x) continue;
        s += '(';
        int y = x;
        bool first = true;
        do {
            if (!first) s += ' ';
            s += std::to_string(y);
            done.add(y);
            y = img_[y - 1];
            first = false;
        } while (y != x);
        s += ')';
    }
    return s.empty() ? "()" : s;
}

}  // namespace projtri
