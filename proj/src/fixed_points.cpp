#include "projtri/fixed_points.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace projtri {

bool is_simplicial_action(const SimplicialComplex& k, const PermGroup& g) {
    if (g.degree() != k.vertex_count()) return false;
    const auto& facets = k.facets();
    for (const auto& p : g.generators()) {
        for (VertexSet f : facets)
            if (!std::binary_search(facets.begin(), facets.end(), p(f))) return false;
    }
    return true;
}

FixedPointComplex fixed_point_complex(const SimplicialComplex& k, const PermGroup& g) {
    if (!is_simplicial_action(k, g))
        throw NotAnAction("group does not act simplicially on the complex");

    // orbits come ordered by minimum ambient vertex
    std::vector<VertexSet> face_orbits;
    for (VertexSet orb : g.orbits())
        if (k.contains_face(orb)) face_orbits.push_back(orb);

    FixedPointComplex out;
    out.vertex_labels = face_orbits;
    int m = static_cast<int>(face_orbits.size());
    if (m == 0) return out;  // empty complex

    std::vector<VertexSet> quotient_facets;
    for (VertexSet f : k.facets()) {
        VertexSet t;
        for (int i = 0; i < m; ++i)
            if (face_orbits[i].subset_of(f)) t.add(i + 1);
        if (!t.empty()) quotient_facets.push_back(t);
    }
    // every face-orbit sits inside some facet, so no quotient vertex is lost
    out.complex = SimplicialComplex::from_facet_sets(m, std::move(quotient_facets));
    return out;
}

std::pair<FixedPointComplex, PermGroup> induced_action(const SimplicialComplex& k,
                                                       const PermGroup& g, const PermGroup& n) {
    if (!is_simplicial_action(k, g) || !is_simplicial_action(k, n))
        throw NotAnAction("group does not act simplicially on the complex");
    if (!n.is_normal_in(g)) throw NotNormal("subgroup is not normal");

    FixedPointComplex fp = fixed_point_complex(k, n);
    int m = static_cast<int>(fp.vertex_labels.size());

    std::vector<Permutation> induced;
    for (const auto& p : g.generators()) {
        std::vector<int> img(m);
        for (int i = 0; i < m; ++i) {
            VertexSet image = p(fp.vertex_labels[i]);
            auto it = std::find(fp.vertex_labels.begin(), fp.vertex_labels.end(), image);
            // normality makes the image another n-orbit, and it is a face
            // because p maps faces to faces
            if (it == fp.vertex_labels.end())
                throw NotNormal("orbit image is not an orbit-vertex");
            img[i] = static_cast<int>(it - fp.vertex_labels.begin()) + 1;
        }
        induced.push_back(Permutation::from_images(std::move(img)));
    }
    return {std::move(fp), PermGroup::generate(m, std::move(induced))};
}

void FixedPointComplex::write(std::ostream& os) const {
    complex.write(os);
    for (VertexSet l : vertex_labels) os << "label " << l.to_string() << "\n";
}

FixedPointComplex FixedPointComplex::read(std::istream& is) {
    std::stringstream complex_part;
    std::vector<VertexSet> labels;
    std::string line;
    while (std::getline(is, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "label") {
            VertexSet l;
            int v;
            while (ls >> v) l.add(v);
            if (l.empty()) throw FormatError("empty label line");
            labels.push_back(l);
        } else {
            complex_part << line << "\n";
        }
    }
    FixedPointComplex out;
    out.complex = SimplicialComplex::read(complex_part);
    out.vertex_labels = std::move(labels);
    if (static_cast<int>(out.vertex_labels.size()) != out.complex.vertex_count())
        throw FormatError("label count does not match vertex count");
    return out;
}

}  // namespace projtri
